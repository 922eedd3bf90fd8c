#pragma once

#include <vector>

#include "qthook/monomial.hpp"
#include "qthook/partition.hpp"

namespace qthook {

struct Cell {
  int i, j;  // 1-based row, column
  bool operator==(const Cell& o) const { return i == o.i && j == o.j; }
  bool operator<(const Cell& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// A Young diagram D(lambda) or shifted diagram S(mu) (mu strict). Rows are
// 1-based; row i occupies columns col_begin(i) .. col_end(i), i.e. 1..lambda_i
// for shapes and i..mu_i+i-1 for shifted shapes.
class Diagram {
 public:
  enum class Kind { shape, shifted };

  static Diagram shape(Partition lambda);
  static Diagram shifted(StrictPartition mu);

  Kind kind() const { return kind_; }
  bool is_shifted() const { return kind_ == Kind::shifted; }
  const Partition& row_lengths() const { return rows_; }
  int row_count() const { return rows_.length(); }
  int cell_count() const { return rows_.size(); }
  int col_begin(int i) const { return kind_ == Kind::shape ? 1 : i; }
  int col_end(int i) const { return col_begin(i) + rows_.part(i) - 1; }
  bool contains(int i, int j) const {
    return i >= 1 && i <= row_count() && j >= col_begin(i) && j <= col_end(i);
  }
  std::vector<Cell> cells() const;    // row-major
  int column_length(int j) const;     // number of cells in column j

  // Hook of a cell: the cell, its arm and its leg; shifted hooks add the
  // broken arm (cells (j+1, l), l > j) when the leg reaches the diagonal.
  // CellOutsideDiagram on a bad cell.
  std::vector<Cell> hook_cells(Cell c) const;
  Monomial hook_monomial(Cell c) const;  // prod z_{j-i} over the hook
  std::vector<Monomial> hook_monomials() const;  // all cells, row-major

 private:
  Kind kind_ = Kind::shape;
  Partition rows_;
};

// tilde-z_k = z_0 z_1 ... z_{k-1}; k >= 0 (k = 0 gives 1).
Monomial tilde_z(int k);

// Complement of a strict partition inside {1..N} and the epsilon word:
// epsilon[k-1] = '+' iff k is a part of mu. NTooSmall unless N >= mu_1.
struct ComplementEpsilon {
  std::vector<int> complement;  // mu^c, strictly decreasing, N - length(mu) parts
  std::vector<char> epsilon;    // entries '+'/'-' for k = 1..N
};
ComplementEpsilon complement_and_epsilon(const StrictPartition& mu, int N);

// Closed-form hook monomials that bypass the cell recursion.
Monomial closed_hook_shifted(const StrictPartition& mu, int N, Cell c);
Monomial closed_hook_shape(const Partition& lambda, Cell c);

// Frobenius decomposition lambda = (arm | leg): r diagonal cells,
// arm_i = lambda_i - i + 1, leg_i = lambda'_i - i + 1.
struct Frobenius {
  int r = 0;
  StrictPartition arm, leg;
};
Frobenius frobenius_split(const Partition& lambda);

}  // namespace qthook
