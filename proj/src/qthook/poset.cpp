#include "qthook/poset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qthook/errors.hpp"

namespace qthook {

namespace {

std::string cell_id(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

ColoredPoset::ColoredPoset(std::vector<std::string> ids,
                           std::vector<std::pair<int, int>> covers)
    : ids_(std::move(ids)) {
  const int n = (int)ids_.size();
  {
    auto sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidSpec("duplicate poset element id");
  }
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw InvalidSpec("cover index out of range");
    if (lo == hi) throw InvalidSpec("cover relates an element to itself");
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(up_[v].begin(), up_[v].end());
    std::sort(down_[v].begin(), down_[v].end());
    if (std::adjacent_find(up_[v].begin(), up_[v].end()) != up_[v].end())
      throw InvalidSpec("duplicate cover");
  }

  // strict order as reachability along covers; topological processing also
  // rejects cycles
  std::vector<int> pending(n, 0);  // unprocessed upper covers
  for (int v = 0; v < n; ++v) pending[v] = (int)up_[v].size();
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (pending[v] == 0) ready.push(v);
  less_.assign(n, std::vector<char>(n, 0));
  int processed = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++processed;
    for (int u : up_[v]) {
      less_[v][u] = 1;
      for (int w = 0; w < n; ++w)
        if (less_[u][w]) less_[v][w] = 1;
    }
    for (int d : down_[v])
      if (--pending[d] == 0) ready.push(d);
  }
  if (processed != n) throw InvalidSpec("cover relation has a cycle");
  for (int v = 0; v < n; ++v)
    for (int u : up_[v])
      for (int w = 0; w < n; ++w)
        if (less_[v][w] && less_[w][u])
          throw InvalidSpec("listed cover " + ids_[v] + " -> " + ids_[u] +
                            " is not a cover (passes through " + ids_[w] + ")");
  colors_.assign(n, std::nullopt);
}

int ColoredPoset::index_of(const std::string& id) const {
  for (int v = 0; v < size(); ++v)
    if (ids_[v] == id) return v;
  throw InvalidSpec("unknown poset element id: " + id);
}

bool ColoredPoset::connected() const {
  const int n = size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (const auto* nbrs : {&up_[v], &down_[v]})
      for (int u : *nbrs)
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          bfs.push(u);
        }
  }
  return reached == n;
}

int ColoredPoset::max_element() const {
  int found = -1;
  for (int v = 0; v < size(); ++v)
    if (up_[v].empty()) {
      if (found >= 0) throw InvalidSpec("poset has more than one maximal element");
      found = v;
    }
  if (found < 0) throw InvalidSpec("poset has no maximal element");
  return found;
}

const std::vector<int>& ColoredPoset::rank() const {
  if (!rank_.empty() || size() == 0) return rank_;
  const int n = size();
  const int v0 = max_element();
  std::vector<int> r(n, 0);
  std::vector<char> visited(n, 0);
  visited[v0] = 1;
  std::queue<int> bfs;
  bfs.push(v0);
  while (!bfs.empty()) {
    int y = bfs.front();
    bfs.pop();
    for (int x : down_[y]) {
      if (!visited[x]) {
        visited[x] = 1;
        r[x] = r[y] - 1;
        bfs.push(x);
      } else if (r[x] != r[y] - 1) {
        throw InconsistentChainLengths("maximal chains through " + ids_[x] +
                                       " have different lengths");
      }
    }
  }
  int lo = 0;
  for (int v = 0; v < n; ++v) {
    if (!visited[v]) throw InvalidSpec("poset is not connected");
    lo = std::min(lo, r[v]);
  }
  for (int& x : r) x -= lo;
  rank_ = std::move(r);
  return rank_;
}

std::vector<int> ColoredPoset::top_tree() const {
  const int n = size();
  std::vector<char> branched(n, 0);
  for (int v = 0; v < n; ++v) branched[v] = up_[v].size() > 1;
  std::vector<int> tree;
  for (int x = 0; x < n; ++x) {
    bool ok = !branched[x];
    for (int y = 0; y < n && ok; ++y)
      if (less_[x][y] && branched[y]) ok = false;
    if (ok) tree.push_back(x);
  }
  return tree;
}

bool ColoredPoset::fully_colored() const {
  for (const auto& c : colors_)
    if (!c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// interval machinery

namespace {

std::vector<int> interval_set(const ColoredPoset& p, int w, int v) {
  std::vector<int> out;
  if (!p.less(w, v)) return out;
  for (int u = 0; u < p.size(); ++u)
    if (u == w || u == v || (p.less(w, u) && p.less(u, v))) out.push_back(u);
  return out;
}

struct DkSides {
  int k = 0;
  int x = -1, y = -1;  // the incomparable pair
};

// structural test: I is a double-tailed diamond d_k(1) iff it has exactly one
// incomparable pair {x,y} with equal chains of size k-2 >= 1 above and below
std::optional<DkSides> classify_dk1(const ColoredPoset& p, const std::vector<int>& I) {
  DkSides s;
  int pairs = 0;
  for (size_t a = 0; a < I.size(); ++a)
    for (size_t b = a + 1; b < I.size(); ++b)
      if (!p.less(I[a], I[b]) && !p.less(I[b], I[a])) {
        ++pairs;
        s.x = I[a];
        s.y = I[b];
      }
  if (pairs != 1) return std::nullopt;
  std::vector<int> above, below;
  for (int u : I) {
    if (u == s.x || u == s.y) continue;
    bool ax = p.less(s.x, u), bx = p.less(u, s.x);
    bool ay = p.less(s.y, u), by = p.less(u, s.y);
    if (ax && ay)
      above.push_back(u);
    else if (bx && by)
      below.push_back(u);
    else
      return std::nullopt;  // related to only one side
  }
  if (above.empty() || above.size() != below.size()) return std::nullopt;
  s.k = (int)above.size() + 2;
  return s;
}

// d_k(1) minus its maximum, k >= 4: one incomparable pair, a chain of k-3 >= 1
// above it and a chain of k-2 below it
std::optional<DkSides> classify_dkminus(const ColoredPoset& p, const std::vector<int>& I) {
  DkSides s;
  int pairs = 0;
  for (size_t a = 0; a < I.size(); ++a)
    for (size_t b = a + 1; b < I.size(); ++b)
      if (!p.less(I[a], I[b]) && !p.less(I[b], I[a])) {
        ++pairs;
        s.x = I[a];
        s.y = I[b];
      }
  if (pairs != 1) return std::nullopt;
  std::vector<int> above, below;
  for (int u : I) {
    if (u == s.x || u == s.y) continue;
    bool ax = p.less(s.x, u), bx = p.less(u, s.x);
    bool ay = p.less(s.y, u), by = p.less(u, s.y);
    if (ax && ay)
      above.push_back(u);
    else if (bx && by)
      below.push_back(u);
    else
      return std::nullopt;
  }
  if (above.empty() || below.size() != above.size() + 1) return std::nullopt;
  s.k = (int)above.size() + 3;
  return s;
}

std::string join_ids(const ColoredPoset& p, const std::vector<int>& I) {
  std::string out = "{";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) out += ",";
    out += p.id(I[i]);
  }
  return out + "}";
}

}  // namespace

int dk1_interval_kind(const ColoredPoset& p, const std::vector<int>& interval) {
  auto s = classify_dk1(p, interval);
  return s ? s->k : 0;
}

DCompleteReport check_dcomplete(const ColoredPoset& p) {
  DCompleteReport rep;
  const int n = p.size();
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };

  // d_3^- completions and their uniqueness in the minimum
  std::map<std::pair<int, int>, std::vector<int>> d3_pairs;
  for (int w = 0; w < n; ++w) {
    const auto& ups = p.covers_up(w);
    for (size_t a = 0; a < ups.size(); ++a)
      for (size_t b = a + 1; b < ups.size(); ++b) {
        int x = ups[a], y = ups[b];
        d3_pairs[{std::min(x, y), std::max(x, y)}].push_back(w);
        bool completed = false;
        for (int v = 0; v < n && !completed; ++v)
          if (p.less(x, v) && p.less(y, v) && interval_set(p, w, v).size() == 4)
            completed = true;
        if (!completed)
          fail("D1: no diamond completes {" + p.id(w) + ";" + p.id(x) + "," +
               p.id(y) + "}");
      }
  }
  for (const auto& [pr, ws] : d3_pairs)
    if (ws.size() > 1)
      fail("D3: {" + p.id(pr.first) + "," + p.id(pr.second) +
           "} covers more than one element");

  // longer intervals
  std::map<std::vector<int>, std::vector<int>> dkminus_tails;  // I \ {min} -> mins
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (!p.less(w, v)) continue;
      auto I = interval_set(p, w, v);
      if (auto s = classify_dk1(p, I)) {
        for (int d : p.covers_down(v))
          if (std::find(I.begin(), I.end(), d) == I.end())
            fail("D2: top of the d_" + std::to_string(s->k) + "-interval " +
                 join_ids(p, I) + " covers " + p.id(d) + " outside it");
      }
      if (auto s = classify_dkminus(p, I)) {
        std::vector<int> tail;
        for (int u : I)
          if (u != w) tail.push_back(u);
        dkminus_tails[tail].push_back(w);
        bool completed = false;
        for (int v2 : p.covers_up(v)) {
          auto J = interval_set(p, w, v2);
          std::vector<int> expect = I;
          expect.push_back(v2);
          std::sort(expect.begin(), expect.end());
          if (J == expect && dk1_interval_kind(p, J) == s->k) completed = true;
        }
        if (!completed)
          fail("D1: the d_" + std::to_string(s->k) + "^- interval " +
               join_ids(p, I) + " does not complete");
      }
    }
  for (const auto& [tail, ws] : dkminus_tails)
    if (ws.size() > 1)
      fail("D3: d_k^- intervals with the same tail " + join_ids(p, tail) +
           " but different minima");

  return rep;
}

// ---------------------------------------------------------------------------
// colorings

namespace {

void validate_coloring(const ColoredPoset& p) {
  const int n = p.size();
  for (int v = 0; v < n; ++v)
    if (!p.color(v)) throw ExtensionFailed("element " + p.id(v) + " is uncolored");
  auto col = [&](int v) { return *p.color(v); };

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!p.less(a, b) && !p.less(b, a) && col(a) == col(b))
        throw ExtensionFailed("incomparable elements " + p.id(a) + ", " + p.id(b) +
                              " share the color " + col(a).str());
  for (int v = 0; v < n; ++v)
    for (int u : p.covers_up(v))
      if (col(v) == col(u))
        throw ExtensionFailed("cover " + p.id(v) + " -> " + p.id(u) +
                              " has equal colors");
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (!p.less(w, v)) continue;
      auto I = interval_set(p, w, v);
      bool chain = true;
      for (size_t a = 0; a < I.size() && chain; ++a)
        for (size_t b = a + 1; b < I.size() && chain; ++b)
          if (!p.less(I[a], I[b]) && !p.less(I[b], I[a])) chain = false;
      if (chain) {
        std::set<VarLabel> cs;
        for (int u : I) cs.insert(col(u));
        if (cs.size() != I.size())
          throw ExtensionFailed("chain interval " + join_ids(p, I) +
                                " repeats a color");
      } else if (classify_dk1(p, I) && !(col(w) == col(v))) {
        throw ExtensionFailed("d_k-interval " + join_ids(p, I) +
                              " has mismatched end colors");
      }
    }
}

}  // namespace

void extend_coloring(ColoredPoset& p) {
  const int n = p.size();
  if (n == 0) return;
  auto tree = p.top_tree();
  std::set<VarLabel> palette;
  for (int t : tree) {
    if (!p.color(t))
      throw ExtensionFailed("top tree element " + p.id(t) + " has no color");
    if (!palette.insert(*p.color(t)).second)
      throw ExtensionFailed("top tree elements share the color " + p.color(t)->str());
  }

  const auto& r = p.rank();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (r[a] != r[b]) return r[a] > r[b];
    return p.id(a) < p.id(b);
  });

  for (int v : order) {
    if (p.color(v)) continue;
    std::optional<VarLabel> chosen;
    for (int u = 0; u < n; ++u) {
      if (!p.less(v, u)) continue;
      auto I = interval_set(p, v, u);
      if (!classify_dk1(p, I)) continue;
      if (!p.color(u))
        throw ExtensionFailed("top of d_k-interval " + join_ids(p, I) +
                              " is uncolored");
      if (!chosen)
        chosen = *p.color(u);
      else if (!(*chosen == *p.color(u)))
        throw ExtensionFailed("d_k-intervals disagree on the color of " + p.id(v));
    }
    if (!chosen)
      throw ExtensionFailed("no d_k-interval determines the color of " + p.id(v));
    p.set_color(v, *chosen);
  }
  validate_coloring(p);
}

// ---------------------------------------------------------------------------
// hooks

std::vector<Monomial> poset_hook_monomials(const ColoredPoset& p) {
  const int n = p.size();
  for (int v = 0; v < n; ++v)
    if (!p.color(v)) throw InvalidSpec("hook monomials need a fully colored poset");
  const auto& r = p.rank();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (r[a] != r[b]) return r[a] < r[b];
    return p.id(a) < p.id(b);
  });

  std::vector<Monomial> hook(n);
  std::vector<char> have(n, 0);
  for (int v : order) {
    std::optional<Monomial> chosen;
    for (int w = 0; w < n; ++w) {
      if (!p.less(w, v)) continue;
      auto I = interval_set(p, w, v);
      auto s = classify_dk1(p, I);
      if (!s) continue;
      if (!have[w] || !have[s->x] || !have[s->y])
        throw InvalidSpec("hook induction visited " + p.id(v) + " too early");
      Monomial cand = hook[s->x] * hook[s->y] * hook[w].inverse();
      if (!cand.integral() || !cand.nonnegative())
        throw InvalidSpec("hook induction at " + p.id(v) +
                          " produced a non-genuine monomial");
      if (!chosen)
        chosen = cand;
      else if (!(*chosen == cand))
        throw AmbiguousHook("d_k-intervals disagree on the hook of " + p.id(v));
    }
    if (chosen) {
      hook[v] = *chosen;
    } else {
      Monomial m = Monomial::var(*p.color(v));
      for (int w = 0; w < n; ++w)
        if (p.less(w, v)) m *= Monomial::var(*p.color(w));
      hook[v] = m;
    }
    have[v] = 1;
  }
  return hook;
}

Monomial hook_monomial_dc(const ColoredPoset& p, int v) {
  if (v < 0 || v >= p.size()) throw InvalidSpec("element index out of range");
  return poset_hook_monomials(p)[v];
}

// ---------------------------------------------------------------------------
// P-partitions and the deformed weight

void enumerate_poset_partitions(const ColoredPoset& p, int budget,
                                const std::function<void(const std::vector<int>&)>& visit) {
  const int n = p.size();
  if (n == 0) {
    visit({});
    return;
  }
  const auto& r = p.rank();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (r[a] != r[b]) return r[a] > r[b];
    return p.id(a) < p.id(b);
  });

  std::vector<int> sigma(n, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      visit(sigma);
      return;
    }
    int v = order[pos];
    int lo = 0;
    for (int u : p.covers_up(v)) lo = std::max(lo, sigma[u]);
    for (int s = lo; used + s <= budget; ++s) {
      sigma[v] = s;
      self(self, pos + 1, used + s);
    }
    sigma[v] = 0;
  };
  rec(rec, 0, 0);
}

Monomial sigma_monomial(const ColoredPoset& p, const std::vector<int>& sigma) {
  if ((int)sigma.size() != p.size()) throw InvalidSpec("sigma has the wrong length");
  Monomial m;
  for (int v = 0; v < p.size(); ++v) {
    if (sigma[v] < 0) throw InvalidSpec("sigma must be non-negative");
    if (!p.color(v)) throw InvalidSpec("sigma monomial needs a fully colored poset");
    m *= Monomial::var(*p.color(v), sigma[v]);
  }
  return m;
}

namespace {

struct ColorContext {
  std::vector<int> tree_of;                 // element -> index into the top tree
  std::vector<std::vector<char>> adjacent;  // top-tree cover adjacency
  int v0 = -1;
  int v0_tree = -1;
};

ColorContext analyze_colors(const ColoredPoset& p) {
  ColorContext ctx;
  auto tree = p.top_tree();
  std::map<VarLabel, int> palette;
  for (size_t i = 0; i < tree.size(); ++i) {
    if (!p.color(tree[i]))
      throw InvalidSpec("top tree element " + p.id(tree[i]) + " has no color");
    if (!palette.emplace(*p.color(tree[i]), (int)i).second)
      throw InvalidSpec("top tree elements share a color");
  }
  std::map<int, int> tree_index;
  for (size_t i = 0; i < tree.size(); ++i) tree_index[tree[i]] = (int)i;
  ctx.adjacent.assign(tree.size(), std::vector<char>(tree.size(), 0));
  for (size_t i = 0; i < tree.size(); ++i)
    for (int u : p.covers_up(tree[i])) {
      auto it = tree_index.find(u);
      if (it == tree_index.end())
        throw InvalidSpec("top tree is not closed upward");
      ctx.adjacent[i][it->second] = ctx.adjacent[it->second][i] = 1;
    }
  ctx.tree_of.resize(p.size());
  for (int v = 0; v < p.size(); ++v) {
    if (!p.color(v)) throw InvalidSpec("weight needs a fully colored poset");
    auto it = palette.find(*p.color(v));
    if (it == palette.end())
      throw InvalidSpec("color of " + p.id(v) + " does not occur on the top tree");
    ctx.tree_of[v] = it->second;
  }
  ctx.v0 = p.max_element();
  ctx.v0_tree = ctx.tree_of[ctx.v0];
  return ctx;
}

void divide_checked(Scalar& w, const Scalar& d) {
  if (d == 0) throw DegenerateDenominator("weight denominator vanishes at this (q,t)");
  w /= d;
}

// The comparable-pair part of the weight: a numerator factor f(diff; d) for
// adjacent colors at odd rank difference 2d+1 and denominator factors
// f(diff; e) f(diff; e-1) for equal colors at even rank difference 2e. The
// boundary factors f(sigma(x); e(x, v0)) over the color class of the maximum
// are included on demand; attaching a fresh maximum above v0 and skipping
// them is the equivalent extended form.
Scalar weight_pairs(const ColoredPoset& p, const ColorContext& ctx,
                    const std::vector<int>& sigma, const FCache& fc, bool boundary) {
  const auto& r = p.rank();
  Scalar w(1);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      const int diff = sigma[x] - sigma[y];
      if (diff < 0) throw InvalidSpec("sigma is not order-reversing");
      const int dr = r[y] - r[x];
      const int cx = ctx.tree_of[x], cy = ctx.tree_of[y];
      if (cx == cy) {
        if (dr % 2 != 0 || dr < 2)
          throw ParityViolation("equal-colored pair " + p.id(x) + " < " + p.id(y) +
                                " at rank difference " + std::to_string(dr));
        divide_checked(w, fc.f(diff, dr / 2) * fc.f(diff, dr / 2 - 1));
      } else if (ctx.adjacent[cx][cy]) {
        if (dr % 2 != 1)
          throw ParityViolation("adjacent-colored pair " + p.id(x) + " < " + p.id(y) +
                                " at rank difference " + std::to_string(dr));
        w *= fc.f(diff, (dr - 1) / 2);
      }
    }
  if (boundary) {
    for (int x = 0; x < p.size(); ++x) {
      if (ctx.tree_of[x] != ctx.v0_tree) continue;
      const int dr = r[ctx.v0] - r[x];
      if (dr % 2 != 0)
        throw ParityViolation("element " + p.id(x) +
                              " shares the maximum's color at odd rank difference");
      w *= fc.f(sigma[x], dr / 2);
    }
  }
  return w;
}

VarLabel fresh_named_label(const ColoredPoset& p, std::string base) {
  auto taken = [&](const VarLabel& l) {
    for (int v = 0; v < p.size(); ++v)
      if (p.color(v) && *p.color(v) == l) return true;
    return false;
  };
  VarLabel l = VarLabel::named(base);
  while (taken(l)) {
    base += "_";
    l = VarLabel::named(base);
  }
  return l;
}

}  // namespace

Scalar weight_wp(const ColoredPoset& p, const std::vector<int>& sigma, const FCache& fc) {
  if ((int)sigma.size() != p.size()) throw InvalidSpec("sigma has the wrong length");
  return weight_pairs(p, analyze_colors(p), sigma, fc, true);
}

Scalar weight_wp_extended(const ColoredPoset& p, const std::vector<int>& sigma,
                          const FCache& fc) {
  if ((int)sigma.size() != p.size()) throw InvalidSpec("sigma has the wrong length");
  const int v0 = p.max_element();
  std::vector<std::string> ids;
  for (int v = 0; v < p.size(); ++v) ids.push_back(p.id(v));
  std::string top_id = "top";
  while (std::find(ids.begin(), ids.end(), top_id) != ids.end()) top_id += "_";
  ids.push_back(top_id);
  std::vector<std::pair<int, int>> covers;
  for (int v = 0; v < p.size(); ++v)
    for (int u : p.covers_up(v)) covers.push_back({v, u});
  covers.push_back({v0, p.size()});
  ColoredPoset ext(ids, covers);
  for (int v = 0; v < p.size(); ++v) {
    if (!p.color(v)) throw InvalidSpec("weight needs a fully colored poset");
    ext.set_color(v, *p.color(v));
  }
  ext.set_color(p.size(), fresh_named_label(p, "top"));
  std::vector<int> sig = sigma;
  sig.push_back(0);
  return weight_pairs(ext, analyze_colors(ext), sig, fc, false);
}

TruncatedSeries poset_lhs_series(const ColoredPoset& p, const FCache& fc,
                                 int degree_bound) {
  TruncatedSeries out(degree_bound);
  if (p.size() == 0) {
    out.add_term(Monomial(), Scalar(1));
    return out;
  }
  auto ctx = analyze_colors(p);
  enumerate_poset_partitions(p, degree_bound, [&](const std::vector<int>& sigma) {
    out.add_term(sigma_monomial(p, sigma), weight_pairs(p, ctx, sigma, fc, true));
  });
  return out;
}

// ---------------------------------------------------------------------------
// rooted trees

bool is_rooted_tree(const ColoredPoset& p) {
  if (p.size() == 0 || !p.connected()) return false;
  int maxima = 0;
  for (int v = 0; v < p.size(); ++v) {
    if (p.covers_up(v).empty())
      ++maxima;
    else if (p.covers_up(v).size() != 1)
      return false;
  }
  return maxima == 1;
}

TruncatedSeries tree_series_recursive(const ColoredPoset& p, const FCache& fc,
                                      int degree_bound) {
  if (!is_rooted_tree(p)) throw InvalidSpec("poset is not a rooted tree");
  for (int v = 0; v < p.size(); ++v)
    if (!p.color(v)) throw InvalidSpec("tree series needs a fully colored poset");
  auto rec = [&](auto&& self, int v) -> TruncatedSeries {
    Monomial zsub = Monomial::var(*p.color(v));
    for (int w = 0; w < p.size(); ++w)
      if (p.less(w, v)) zsub *= Monomial::var(*p.color(w));
    TruncatedSeries s = f_series(zsub, fc, degree_bound);
    for (int c : p.covers_down(v)) s *= self(self, c);
    return s;
  };
  return rec(rec, p.max_element());
}

// ---------------------------------------------------------------------------
// builders

ColoredPoset poset_from_shape(const Partition& lambda) {
  Diagram d = Diagram::shape(lambda);
  auto cells = d.cells();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> ids;
  for (auto c : cells) {
    index[{c.i, c.j}] = (int)ids.size();
    ids.push_back(cell_id(c.i, c.j));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto c : cells) {
    if (d.contains(c.i - 1, c.j)) covers.push_back({index[{c.i, c.j}], index[{c.i - 1, c.j}]});
    if (d.contains(c.i, c.j - 1)) covers.push_back({index[{c.i, c.j}], index[{c.i, c.j - 1}]});
  }
  ColoredPoset p(ids, covers);
  for (auto c : cells) p.set_color(index[{c.i, c.j}], VarLabel::z(c.j - c.i));
  return p;
}

ColoredPoset poset_from_shifted(const StrictPartition& mu, bool two_color) {
  Diagram d = Diagram::shifted(mu);
  auto cells = d.cells();
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> ids;
  for (auto c : cells) {
    index[{c.i, c.j}] = (int)ids.size();
    ids.push_back(cell_id(c.i, c.j));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto c : cells) {
    if (d.contains(c.i - 1, c.j)) covers.push_back({index[{c.i, c.j}], index[{c.i - 1, c.j}]});
    if (d.contains(c.i, c.j - 1)) covers.push_back({index[{c.i, c.j}], index[{c.i, c.j - 1}]});
  }
  ColoredPoset p(ids, covers);
  for (auto c : cells) {
    VarLabel col = VarLabel::z(c.j - c.i);
    if (c.i == c.j && two_color && c.i % 2 == 0) col = VarLabel::zprime();
    p.set_color(index[{c.i, c.j}], col);
  }
  return p;
}

ColoredPoset poset_from_tree(const std::string& spec) {
  struct Node {
    std::string name;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && std::isspace((unsigned char)spec[pos])) ++pos;
  };
  auto parse = [&](auto&& self) -> int {
    skip_ws();
    if (pos >= spec.size() || spec[pos] != '(')
      throw InvalidSpec("tree spec: expected '(' at position " + std::to_string(pos));
    ++pos;
    skip_ws();
    std::string name;
    while (pos < spec.size() &&
           (std::isalnum((unsigned char)spec[pos]) || spec[pos] == '_'))
      name += spec[pos++];
    if (name.empty())
      throw InvalidSpec("tree spec: expected a node name at position " +
                        std::to_string(pos));
    int me = (int)nodes.size();
    nodes.push_back({name, {}});
    skip_ws();
    while (pos < spec.size() && spec[pos] == '(') {
      int child = self(self);
      nodes[me].children.push_back(child);
      skip_ws();
    }
    if (pos >= spec.size() || spec[pos] != ')')
      throw InvalidSpec("tree spec: expected ')' at position " + std::to_string(pos));
    ++pos;
    return me;
  };
  int root = parse(parse);
  skip_ws();
  if (pos != spec.size())
    throw InvalidSpec("tree spec: trailing characters at position " +
                      std::to_string(pos));
  (void)root;  // nodes[0]

  std::vector<std::string> ids;
  for (const auto& nd : nodes) ids.push_back(nd.name);
  std::vector<std::pair<int, int>> covers;
  for (int v = 0; v < (int)nodes.size(); ++v)
    for (int c : nodes[v].children) covers.push_back({c, v});
  ColoredPoset p(ids, covers);
  for (int v = 0; v < (int)nodes.size(); ++v)
    p.set_color(v, VarLabel::named(nodes[v].name));
  return p;
}

ColoredPoset poset_dk1(int k) {
  if (k < 3) throw InvalidSpec("d_k(1) needs k >= 3");
  std::vector<std::string> ids;
  for (int i = 1; i <= k - 2; ++i) ids.push_back("t" + std::to_string(i));
  ids.push_back("x");
  ids.push_back("y");
  for (int i = 1; i <= k - 2; ++i) ids.push_back("b" + std::to_string(i));
  auto t = [&](int i) { return i - 1; };
  auto b = [&](int i) { return k + i - 1; };
  const int x = k - 2, y = k - 1;
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= k - 3; ++i) covers.push_back({t(i + 1), t(i)});
  covers.push_back({x, t(k - 2)});
  covers.push_back({y, t(k - 2)});
  covers.push_back({b(1), x});
  covers.push_back({b(1), y});
  for (int i = 1; i <= k - 3; ++i) covers.push_back({b(i + 1), b(i)});
  ColoredPoset p(ids, covers);
  for (int i = 1; i <= k - 2; ++i) p.set_color(t(i), VarLabel::named("a" + std::to_string(i)));
  p.set_color(x, VarLabel::named("ax"));
  p.set_color(y, VarLabel::named("ay"));
  for (int i = 1; i <= k - 2; ++i)
    p.set_color(b(i), VarLabel::named("a" + std::to_string(k - 1 - i)));
  return p;
}

// ---------------------------------------------------------------------------
// JSON

ColoredPoset poset_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("poset file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw InvalidSpec("poset file needs elements and covers");
  if (!j["elements"].is_array() || !j["covers"].is_array() ||
      (j.contains("top_tree_colors") && !j["top_tree_colors"].is_object()))
    throw InvalidSpec("poset file fields have the wrong shapes");

  std::vector<std::string> ids;
  std::map<std::string, int> index;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw InvalidSpec("poset elements must be strings");
    index[e.get<std::string>()] = (int)ids.size();
    ids.push_back(e.get<std::string>());
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw InvalidSpec("poset covers must be [lower, upper] id pairs");
    auto lo = index.find(c[0].get<std::string>());
    auto hi = index.find(c[1].get<std::string>());
    if (lo == index.end() || hi == index.end())
      throw InvalidSpec("poset cover mentions an unknown element");
    covers.push_back({lo->second, hi->second});
  }
  ColoredPoset p(ids, covers);
  if (j.contains("top_tree_colors")) {
    for (const auto& [id, label] : j["top_tree_colors"].items()) {
      if (!label.is_string()) throw InvalidSpec("poset colors must be strings");
      auto it = index.find(id);
      if (it == index.end())
        throw InvalidSpec("poset color mentions an unknown element: " + id);
      p.set_color(it->second, VarLabel::parse(label.get<std::string>()));
    }
  } else {
    // default coloring: every top-tree element gets its own named color
    for (int t : p.top_tree()) p.set_color(t, VarLabel::named(p.id(t)));
  }
  extend_coloring(p);
  return p;
}

std::string poset_to_json_text(const ColoredPoset& p) {
  nlohmann::json j;
  j["elements"] = nlohmann::json::array();
  for (int v = 0; v < p.size(); ++v) j["elements"].push_back(p.id(v));
  j["covers"] = nlohmann::json::array();
  for (int v = 0; v < p.size(); ++v)
    for (int u : p.covers_up(v))
      j["covers"].push_back(nlohmann::json::array({p.id(v), p.id(u)}));
  j["top_tree_colors"] = nlohmann::json::object();
  for (int t : p.top_tree()) {
    if (!p.color(t))
      throw InvalidSpec("cannot serialize a poset whose top tree is uncolored");
    j["top_tree_colors"][p.id(t)] = p.color(t)->str();
  }
  return j.dump(2) + "\n";
}

}  // namespace qthook
