#include "qthook/ppartition.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "qthook/errors.hpp"

namespace qthook {

void enumerate_labelings(const LabelingPlan& plan, int budget,
                         const std::function<void(const std::vector<int>&)>& visit) {
  const int n = (int)plan.sources.size();
  assert((int)plan.forced.size() == n);
  std::vector<int> val(n, 0);
  auto rec = [&](auto&& self, int slot, int used) -> void {
    if (slot == n) {
      visit(val);
      return;
    }
    int lb = 0;
    for (int s : plan.sources[slot]) lb = std::max(lb, val[s]);
    if (plan.forced[slot] >= 0) {
      int v = plan.forced[slot];
      if (v < lb || used + v > budget) return;
      val[slot] = v;
      self(self, slot + 1, used + v);
      return;
    }
    for (int v = lb; used + v <= budget; ++v) {
      val[slot] = v;
      self(self, slot + 1, used + v);
    }
  };
  rec(rec, 0, 0);
}

PPArray::PPArray(Diagram d, std::vector<std::vector<int>> rows)
    : d_(std::move(d)), rows_(std::move(rows)) {
  assert((int)rows_.size() == d_.row_count());
  for (int i = 1; i <= d_.row_count(); ++i)
    assert((int)rows_[i - 1].size() == d_.col_end(i) - d_.col_begin(i) + 1);
}

int PPArray::entry(int i, int j) const {
  if (!d_.contains(i, j))
    throw CellOutsideDiagram("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside the diagram");
  return rows_[i - 1][j - d_.col_begin(i)];
}

int PPArray::padded(int i, int j) const {
  if (i < 1 || j < 1) return 0;
  if (d_.is_shifted() && i > j) return 0;
  // all remaining references produced by the weight formulas are in-diagram
  return entry(i, j);
}

int PPArray::total() const {
  int t = 0;
  for (const auto& r : rows_)
    for (int v : r) t += v;
  return t;
}

std::string PPArray::str() const {
  std::string s;
  for (int i = 1; i <= d_.row_count(); ++i) {
    if (i > 1) s += " / ";
    for (int j = d_.col_begin(i); j <= d_.col_end(i); ++j) {
      if (j > d_.col_begin(i)) s += ",";
      s += std::to_string(entry(i, j));
    }
  }
  return s;
}

std::string PPArray::json_text() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= d_.row_count(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = d_.col_begin(i); j <= d_.col_end(i); ++j) row.push_back(entry(i, j));
    rows.push_back(row);
  }
  return rows.dump();
}

void enumerate_ppartitions(const Diagram& d, int budget,
                           const std::optional<Partition>& profile,
                           const std::function<void(const PPArray&)>& visit) {
  const auto cells = d.cells();
  const int n = (int)cells.size();
  LabelingPlan plan;
  plan.sources.resize(n);
  plan.forced.assign(n, -1);
  auto slot_of = [&](int i, int j) {
    return (int)(std::lower_bound(cells.begin(), cells.end(), Cell{i, j}) - cells.begin());
  };
  for (int s = 0; s < n; ++s) {
    auto [i, j] = cells[s];
    if (d.contains(i - 1, j)) plan.sources[s].push_back(slot_of(i - 1, j));
    if (d.contains(i, j - 1)) plan.sources[s].push_back(slot_of(i, j - 1));
  }
  if (profile) {
    if (!d.is_shifted()) throw InvalidSpec("profiles only apply to shifted shapes");
    const int r = d.row_count();
    if (profile->length() > r)
      throw InfeasibleProfile("profile " + profile->str() + " has more than " +
                              std::to_string(r) + " parts");
    if (profile->size() > budget)
      throw InfeasibleProfile("profile " + profile->str() + " exceeds the degree budget " +
                              std::to_string(budget));
    for (int i = 1; i <= r; ++i) plan.forced[slot_of(i, i)] = profile->part(r - i + 1);
  }
  enumerate_labelings(plan, budget, [&](const std::vector<int>& val) {
    std::vector<std::vector<int>> rows(d.row_count());
    int s = 0;
    for (int i = 1; i <= d.row_count(); ++i)
      for (int j = d.col_begin(i); j <= d.col_end(i); ++j) rows[i - 1].push_back(val[s++]);
    visit(PPArray(d, std::move(rows)));
  });
}

Monomial trace_monomial(const PPArray& a) {
  Monomial m;
  for (const Cell& c : a.diagram().cells())
    m *= Monomial::var(VarLabel::z(c.j - c.i), a.entry(c.i, c.j));
  return m;
}

std::vector<Partition> traces(const PPArray& a, int N) {
  std::vector<Partition> out;
  for (int k = 0; k <= N; ++k) {
    std::vector<int> diag;  // read from the south-east end: largest i first
    for (int i = a.diagram().row_count(); i >= 1; --i)
      if (a.diagram().contains(i, k + i)) diag.push_back(a.entry(i, k + i));
    out.push_back(Partition(std::move(diag)));
  }
  return out;
}

Partition profile(const PPArray& a) {
  std::vector<int> diag;
  for (int i = a.diagram().row_count(); i >= 1; --i)
    if (a.diagram().contains(i, i)) diag.push_back(a.entry(i, i));
  return Partition(std::move(diag));
}

namespace {

// the square-lattice factor shared by shapes and off-diagonal shifted cells
Scalar cell_factor(const PPArray& a, const FCache& fc, int i, int j) {
  const int v = a.entry(i, j);
  Scalar w(1);
  for (int m = 0; m < std::max(i, j); ++m) {
    w *= fc.f(v - a.padded(i - m, j - m - 1), m);
    w *= fc.f(v - a.padded(i - m - 1, j - m), m);
    w /= fc.f(v - a.padded(i - m, j - m), m);
    w /= fc.f(v - a.padded(i - m - 1, j - m - 1), m);
  }
  return w;
}

}  // namespace

Scalar weight_shape(const PPArray& a, const FCache& fc) {
  if (a.diagram().is_shifted()) throw InvalidSpec("weight_shape needs a plain shape");
  Scalar w(1);
  for (const Cell& c : a.diagram().cells()) w *= cell_factor(a, fc, c.i, c.j);
  return w;
}

Scalar weight_shifted(const PPArray& a, const FCache& fc) {
  if (!a.diagram().is_shifted()) throw InvalidSpec("weight_shifted needs a shifted shape");
  Scalar w(1);
  for (const Cell& c : a.diagram().cells()) {
    if (c.i < c.j) {
      w *= cell_factor(a, fc, c.i, c.j);
    } else {
      const int i = c.i, v = a.entry(i, i);
      for (int m = 0; 2 * m <= i; ++m) {
        w *= fc.f(v - a.padded(i - 2 * m - 1, i - 2 * m), 2 * m);
        w *= fc.f(v - a.padded(i - 2 * m - 2, i - 2 * m - 1), 2 * m + 1);
        w /= fc.f(v - a.padded(i - 2 * m, i - 2 * m), 2 * m);
        w /= fc.f(v - a.padded(i - 2 * m - 2, i - 2 * m - 2), 2 * m + 1);
      }
    }
  }
  return w;
}

Scalar weight_v(const PPArray& a, const FCache& fc) {
  if (!a.diagram().is_shifted()) throw InvalidSpec("weight_v needs a shifted shape");
  Scalar w(1);
  for (const Cell& c : a.diagram().cells()) {
    if (c.i < c.j) {
      w *= cell_factor(a, fc, c.i, c.j);
    } else {
      const int i = c.i, v = a.entry(i, i);
      for (int m = 0; m < i; ++m) {
        w *= fc.f(v - a.padded(i - m - 1, i - m), m);
        w /= fc.f(v - a.padded(i - m, i - m), m);
      }
    }
  }
  return w;
}

TauFactors tau_factors(const Partition& tau, const FCache& fc) {
  TauFactors tf{Scalar(1), Scalar(1), tau.odd_columns()};
  for (int i = 1; i <= tau.length(); ++i)
    for (int j = i; j <= tau.length(); ++j) {
      Scalar factor = fc.f(tau.part(i) - tau.part(j + 1), j - i) /
                      fc.f(tau.part(i) - tau.part(j), j - i);
      tf.b *= factor;
      if ((j - i) % 2 == 0) tf.bel *= factor;
    }
  return tf;
}

TruncatedSeries lhs_series(const Diagram& d, WeightKind kind, const FCache* fc,
                           int degree_bound, const std::optional<Partition>& profile) {
  if (kind != WeightKind::none && fc == nullptr)
    throw InvalidSpec("weighted enumeration needs a (q,t) point");
  if (kind == WeightKind::v && !d.is_shifted())
    throw InvalidSpec("V-weight only applies to shifted shapes");
  TruncatedSeries s(degree_bound);
  enumerate_ppartitions(d, degree_bound, profile, [&](const PPArray& a) {
    Scalar w(1);
    switch (kind) {
      case WeightKind::none: break;
      case WeightKind::w: w = d.is_shifted() ? weight_shifted(a, *fc) : weight_shape(a, *fc); break;
      case WeightKind::v: w = weight_v(a, *fc); break;
    }
    s.add_term(trace_monomial(a), w);
  });
  return s;
}

}  // namespace qthook
