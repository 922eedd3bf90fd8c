#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qthook/diagram.hpp"
#include "qthook/monomial.hpp"
#include "qthook/partition.hpp"
#include "qthook/qtpoint.hpp"
#include "qthook/series.hpp"
#include "qthook/varlabel.hpp"

namespace qthook {

// Finite poset with string element ids and a (possibly partial) coloring by
// variable labels. Covers are stored lower -> upper; the order relation and
// the rank function are derived on construction.
class ColoredPoset {
 public:
  ColoredPoset(std::vector<std::string> ids, std::vector<std::pair<int, int>> covers);

  int size() const { return (int)ids_.size(); }
  const std::string& id(int v) const { return ids_[v]; }
  int index_of(const std::string& id) const;  // InvalidSpec if unknown
  const std::vector<int>& covers_up(int v) const { return up_[v]; }
  const std::vector<int>& covers_down(int v) const { return down_[v]; }
  bool less(int a, int b) const { return less_[a][b]; }  // strict order
  bool connected() const;
  int max_element() const;  // InvalidSpec unless unique

  // rank normalized so the unique maximum has the largest rank and every
  // cover differs by one; InconsistentChainLengths if no such grading exists
  const std::vector<int>& rank() const;

  // elements x with every y >= x covered by at most one element
  std::vector<int> top_tree() const;

  void set_color(int v, const VarLabel& c) { colors_[v] = c; }
  const std::optional<VarLabel>& color(int v) const { return colors_[v]; }
  bool fully_colored() const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<char>> less_;
  std::vector<std::optional<VarLabel>> colors_;
  mutable std::vector<int> rank_;  // computed lazily
};

// Builders. Shapes and shifted shapes use cell ids "i,j" and content colors
// (the shifted diagonal alternates z0 / z0' exactly when two_color is set;
// otherwise it is constantly z0). Rooted trees use the grammar
// TREE := '(' NAME TREE* ')' with the root as maximum and each element its
// own color. dk1(k) is the double-tailed diamond with named colors a1..,
// ax, ay and the mirrored colors on the lower tail.
ColoredPoset poset_from_shape(const Partition& lambda);
ColoredPoset poset_from_shifted(const StrictPartition& mu, bool two_color);
ColoredPoset poset_from_tree(const std::string& spec);
ColoredPoset poset_dk1(int k);

// d-completeness: every d_k^- completes upward (D1), tops of d_k-intervals
// cover only inside their interval (D2), no two d_k^- differ only in the
// minimum (D3). Violations come back as messages.
struct DCompleteReport {
  bool ok = true;
  std::vector<std::string> violations;
};
DCompleteReport check_dcomplete(const ColoredPoset& p);

// the k of the double-tailed diamond the interval set is isomorphic to,
// or 0 if it is none
int dk1_interval_kind(const ColoredPoset& p, const std::vector<int>& interval);

// Extend a top-tree coloring to the whole poset via the d_k-interval rule
// c(bottom) = c(top); ExtensionFailed if some element cannot be reached or
// two intervals disagree. The result is validated against the four coloring
// conditions (incomparable and covering pairs get distinct colors, chains
// have distinct colors, d_k-intervals match top and bottom).
void extend_coloring(ColoredPoset& p);

// Hook monomials by induction: down-set product for non-tops, and
// z[H(x)] z[H(y)] / z[H(w)] for the top of a d_k-interval [w,v];
// AmbiguousHook if two intervals disagree. The poset must be fully colored.
Monomial hook_monomial_dc(const ColoredPoset& p, int v);
std::vector<Monomial> poset_hook_monomials(const ColoredPoset& p);

// P-partitions: order-reversing sigma with sum <= budget, enumerated in
// decreasing rank order (ties by element id) with ascending values.
void enumerate_poset_partitions(const ColoredPoset& p, int budget,
                                const std::function<void(const std::vector<int>&)>& visit);

Monomial sigma_monomial(const ColoredPoset& p, const std::vector<int>& sigma);

// The deformed weight: over comparable pairs with adjacent colors a factor
// f(diff; d), over same-colored pairs denominators f(diff; e) f(diff; e-1),
// and boundary factors f(sigma(x); e(x,v0)) on the color class of the
// maximum. ParityViolation if a rank difference has the wrong parity.
Scalar weight_wp(const ColoredPoset& p, const std::vector<int>& sigma, const FCache& fc);

// same weight via the extended poset with a fresh maximum above v0; used to
// cross-check weight_wp
Scalar weight_wp_extended(const ColoredPoset& p, const std::vector<int>& sigma,
                          const FCache& fc);

TruncatedSeries poset_lhs_series(const ColoredPoset& p, const FCache& fc, int degree_bound);

// independent oracle for rooted trees: F(z[subtree]) recursion
TruncatedSeries tree_series_recursive(const ColoredPoset& p, const FCache& fc,
                                      int degree_bound);
bool is_rooted_tree(const ColoredPoset& p);

// JSON poset files: {"elements": [...], "covers": [[lo,hi],...],
// "top_tree_colors": {id: label, ...}}; colors must cover the top tree and
// are extended to the rest on load.
ColoredPoset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const ColoredPoset& p);

}  // namespace qthook
