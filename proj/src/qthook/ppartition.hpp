#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qthook/diagram.hpp"
#include "qthook/qtpoint.hpp"
#include "qthook/series.hpp"

namespace qthook {

// Shared budgeted DFS over order-preserving non-negative integer labelings.
// Slots are filled in index order; the value at a slot must be >= every value
// at sources[slot] (earlier indices only); forced[slot] >= 0 pins a value;
// the sum over all slots never exceeds budget. Values are tried in ascending
// order, so the visit order is deterministic.
struct LabelingPlan {
  std::vector<std::vector<int>> sources;
  std::vector<int> forced;  // -1 = free
};
void enumerate_labelings(const LabelingPlan& plan, int budget,
                         const std::function<void(const std::vector<int>&)>& visit);

// A reverse (shifted) plane partition: non-negative entries on the diagram,
// weakly increasing along rows and columns.
class PPArray {
 public:
  PPArray(Diagram d, std::vector<std::vector<int>> rows);
  const Diagram& diagram() const { return d_; }
  int entry(int i, int j) const;   // CellOutsideDiagram on a bad cell
  // boundary convention: row/column index <= 0 (and row > column for shifted
  // shapes) reads as 0; positive in-range indices must be genuine cells
  int padded(int i, int j) const;
  int total() const;
  std::string str() const;
  std::string json_text() const;  // row-lists, e.g. [[0,0,1],[1,2]]

 private:
  Diagram d_;
  std::vector<std::vector<int>> rows_;  // rows_[i-1][j - col_begin(i)]
};

// Enumerate all arrays on the diagram with total() <= budget; profile (shifted
// only) pins the diagonal to tau read from the south-east end, i.e.
// sigma_{i,i} = tau_{r-i+1}. InfeasibleProfile if tau cannot be pinned or
// |tau| > budget; a profile merely unreachable within the budget yields an
// empty enumeration.
void enumerate_ppartitions(const Diagram& d, int budget,
                           const std::optional<Partition>& profile,
                           const std::function<void(const PPArray&)>& visit);

// z^{tr(pi)} = prod over cells z_{j-i}^{pi_{ij}}.
Monomial trace_monomial(const PPArray& a);

// Diagonal traces sigma[k], k = 0..N, each read from the south-east end so it
// is a partition; profile(a) = sigma[0].
std::vector<Partition> traces(const PPArray& a, int N);
Partition profile(const PPArray& a);

// The three weights: W on shapes, W and V on shifted shapes.
Scalar weight_shape(const PPArray& a, const FCache& fc);
Scalar weight_shifted(const PPArray& a, const FCache& fc);
Scalar weight_v(const PPArray& a, const FCache& fc);

// b_tau, b^el_tau and the odd-column count o(tau).
struct TauFactors {
  Scalar b, bel;
  int odd_columns = 0;
};
TauFactors tau_factors(const Partition& tau, const FCache& fc);

enum class WeightKind { none, w, v };

// sum over arrays of weight * z^{tr}; fc may be null only for WeightKind::none
TruncatedSeries lhs_series(const Diagram& d, WeightKind kind, const FCache* fc,
                           int degree_bound,
                           const std::optional<Partition>& profile = std::nullopt);

}  // namespace qthook
