#include "qthook/diagram.hpp"

#include <cassert>

#include "qthook/errors.hpp"

namespace qthook {

Diagram Diagram::shape(Partition lambda) {
  Diagram d;
  d.kind_ = Kind::shape;
  d.rows_ = std::move(lambda);
  return d;
}

Diagram Diagram::shifted(StrictPartition mu) {
  Diagram d;
  d.kind_ = Kind::shifted;
  d.rows_ = mu.as_partition();
  return d;
}

std::vector<Cell> Diagram::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int i = 1; i <= row_count(); ++i)
    for (int j = col_begin(i); j <= col_end(i); ++j) out.push_back({i, j});
  return out;
}

int Diagram::column_length(int j) const {
  int n = 0;
  for (int i = 1; i <= row_count(); ++i) n += contains(i, j) ? 1 : 0;
  return n;
}

std::vector<Cell> Diagram::hook_cells(Cell c) const {
  if (!contains(c.i, c.j))
    throw CellOutsideDiagram("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                             ") outside the diagram");
  std::vector<Cell> out;
  for (int l = c.j; l <= col_end(c.i); ++l) out.push_back({c.i, l});  // cell + arm
  for (int k = c.i + 1; contains(k, c.j); ++k) out.push_back({k, c.j});  // leg
  if (kind_ == Kind::shifted && c.j + 1 <= row_count()) {
    // broken arm: the whole row j+1 (its columns all exceed j)
    int r = c.j + 1;
    for (int l = col_begin(r); l <= col_end(r); ++l) out.push_back({r, l});
  }
  return out;
}

Monomial Diagram::hook_monomial(Cell c) const {
  Monomial m;
  for (const Cell& h : hook_cells(c)) m *= Monomial::var(VarLabel::z(h.j - h.i));
  return m;
}

std::vector<Monomial> Diagram::hook_monomials() const {
  std::vector<Monomial> out;
  for (const Cell& c : cells()) out.push_back(hook_monomial(c));
  return out;
}

Monomial tilde_z(int k) {
  assert(k >= 0);
  Monomial m;
  for (int a = 0; a < k; ++a) m *= Monomial::var(VarLabel::z(a));
  return m;
}

namespace {

// x-tilde_k = x_0 x_1 ... x_{k-1} with x_0 = z_0^{1/2}, x_a = z_{sign*a}
Monomial tilde_half(int k, int sign) {
  Monomial m;
  if (k == 0) return m;
  m = Monomial::var_half(VarLabel::z(0), 1);
  for (int a = 1; a < k; ++a) m *= Monomial::var(VarLabel::z(sign * a));
  return m;
}

}  // namespace

ComplementEpsilon complement_and_epsilon(const StrictPartition& mu, int N) {
  if (N < mu.part(1))
    throw NTooSmall("N=" + std::to_string(N) + " smaller than the largest part of " + mu.str());
  ComplementEpsilon ce;
  ce.epsilon.assign(N, '-');
  for (int i = 1; i <= mu.length(); ++i) ce.epsilon[mu.part(i) - 1] = '+';
  for (int k = N; k >= 1; --k)
    if (ce.epsilon[k - 1] == '-') ce.complement.push_back(k);
  return ce;
}

Monomial closed_hook_shifted(const StrictPartition& mu, int N, Cell c) {
  Diagram d = Diagram::shifted(mu);
  if (!d.contains(c.i, c.j))
    throw CellOutsideDiagram("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                             ") outside " + mu.str());
  auto ce = complement_and_epsilon(mu, N);
  int r = mu.length();
  if (c.j < r) return tilde_z(mu.part(c.i)) * tilde_z(mu.part(c.j + 1));
  if (c.j == r) return tilde_z(mu.part(c.i));
  // j > r: the hook telescopes against the complement part mu^c_{N-j+1}
  int comp = ce.complement[N - c.j];  // 1-based index N-j+1
  return tilde_z(mu.part(c.i)) * tilde_z(comp).inverse();
}

Monomial closed_hook_shape(const Partition& lambda, Cell c) {
  Diagram d = Diagram::shape(lambda);
  if (!d.contains(c.i, c.j))
    throw CellOutsideDiagram("cell (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                             ") outside " + lambda.str());
  Frobenius fr = frobenius_split(lambda);
  const int r = fr.r;
  if (c.i <= r && c.j <= r) return tilde_half(fr.arm.part(c.i), 1) * tilde_half(fr.leg.part(c.j), -1);
  if (c.i <= r && c.j > r) {
    auto ce = complement_and_epsilon(fr.arm, fr.arm.part(1));
    int comp = ce.complement[fr.arm.part(1) - c.j];  // arm-complement index N-j+1
    return tilde_half(fr.arm.part(c.i), 1) * tilde_half(comp, 1).inverse();
  }
  assert(c.j <= r && c.i > r);
  auto ce = complement_and_epsilon(fr.leg, fr.leg.part(1));
  int comp = ce.complement[fr.leg.part(1) - c.i];
  return tilde_half(fr.leg.part(c.j), -1) * tilde_half(comp, -1).inverse();
}

Frobenius frobenius_split(const Partition& lambda) {
  Frobenius fr;
  while (lambda.part(fr.r + 1) >= fr.r + 1) ++fr.r;
  Partition conj = lambda.conjugate();
  std::vector<int> arm, leg;
  for (int i = 1; i <= fr.r; ++i) {
    arm.push_back(lambda.part(i) - i + 1);
    leg.push_back(conj.part(i) - i + 1);
  }
  fr.arm = StrictPartition(std::move(arm));
  fr.leg = StrictPartition(std::move(leg));
  return fr;
}

}  // namespace qthook
