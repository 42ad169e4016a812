#pragma once

// Special points of the desingularized d-fold product of a curve with two
// smooth components C_1, C_2 meeting at q nodes.
//
// A special point is recorded as its node tuple (l_1, ..., l_d) together with
// the d+1 words [u_1], ..., [u_{d+1}] over {1, 2} naming the local branches.
// Nodes are 0-based here; words keep the letters '1' and '2'.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "abelmap/local_blowup.hpp"
#include "abelmap/rational.hpp"

namespace abelmap {

class Label {
 public:
  Label() = default;
  /// Throws InvalidInput unless every letter is '1' or '2'.
  explicit Label(std::string letters);

  int length() const { return static_cast<int>(letters_.size()); }
  /// Letter at 0-based position k, as 1 or 2.
  int letter(int k) const { return letters_[k] - '0'; }
  Label extended(int letter) const;
  const std::string& str() const { return letters_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

struct SpecialPointData {
  std::vector<int> ells;      // node index per factor, length d
  std::vector<Label> labels;  // d+1 words of length d

  int degree() const { return static_cast<int>(ells.size()); }
  /// Structural invariants: d+1 pairwise distinct labels of length d, and
  /// node indices in [0, q). Throws NotConstructible.
  void validate(int q) const;
  bool labels_sorted() const;

  friend bool operator==(const SpecialPointData&, const SpecialPointData&) = default;
  friend std::strong_ordering operator<=>(const SpecialPointData& a, const SpecialPointData& b) {
    if (auto c = a.ells <=> b.ells; c != 0) return c;
    return a.labels <=> b.labels;
  }
};

/// Builds a point from 1-based node names and word strings; labels are sorted.
SpecialPointData make_special_point(const std::vector<int>& ells_one_based,
                                    const std::vector<std::string>& words);

/// Nodes renamed 0, 1, ... in order of first appearance.
SpecialPointData symbolic_form(const SpecialPointData& point);

/// Ordering of the labels induced by choosing `node` for the next factor,
/// returned as label indices from first to last.
using OrderingRule = std::function<std::vector<int>(const SpecialPointData&, int node)>;

/// u_{j1} precedes u_{j2} in the node-ordering: either the last position k
/// with l_k == node where they differ has u_{j1}(k) = 2, u_{j2}(k) = 1; or they
/// agree on all such positions and u_{j1} = 1, u_{j2} = 2 at the first
/// position where they differ.
bool ell_less(const SpecialPointData& point, int node, int j1, int j2);

/// Labels sorted by ell_less. Throws OrderIncomplete if ell_less is not a
/// strict total order on the labels.
std::vector<int> ell_order(const SpecialPointData& point, int node);

/// Points over (point, node): with [v_1..v_{d+1}] the ordering, for each
/// h the labels [v_1 1]..[v_h 1], [v_h 2]..[v_{d+1} 2], stored sorted.
/// Throws NotConstructible on structurally invalid input.
std::vector<SpecialPointData> extend_special_point(const SpecialPointData& point, int node,
                                                   const OrderingRule& rule = ell_order);

/// Streams every point reachable from {(l), [1], [2]} in the stable order:
/// node tuples lexicographically, then the h choices at each level.
void for_each_special_point(int d, int q, const OrderingRule& rule,
                            const std::function<void(const SpecialPointData&)>& visit);

/// The points whose node tuple is exactly `ells`, in h-choice order.
void for_each_special_point_over(const std::vector<int>& ells, const OrderingRule& rule,
                                 const std::function<void(const SpecialPointData&)>& visit);

std::vector<SpecialPointData> enumerate_special_points(int d, int q,
                                                       const OrderingRule& rule = ell_order);

/// Number of points for_each_special_point visits: q^d * d!.
std::uint64_t special_point_count(int d, int q);

struct AVector {
  std::vector<int> per_node;  // a^l = #{k : l_k = l and u_j(k) = 2}
  int total = 0;

  bool componentwise_le(const AVector& other) const;
};

AVector a_vector(const SpecialPointData& point, int label, int q);

/// ceil((|a| - deg L|_{C_2} + e_{C_2}) / q - 1/2)
Integer b_from_count(int a_total, Integer deg_l_c2, const Rational& e_c2, int q);
Integer b_value(const SpecialPointData& point, int label, Integer deg_l_c2, const Rational& e_c2,
                int q);

struct PropMainViolation {
  int item = 0;   // 1..5
  int index = 0;  // j such that the pair (j, j+1) fails; 0 for items 1 and 4
};

struct PropMainReport {
  std::vector<int> ordering;
  std::vector<PropMainViolation> violations;

  bool holds() const { return violations.empty(); }
  bool item_holds(int item) const;
};

/// Checks the five structural properties of a constructible point for one
/// node, reading labels in their stored order.
PropMainReport check_prop_main(const SpecialPointData& point, int node, int q);

/// Custom blowup order at each step d -> d+1: order of the diagonals, order
/// of the product-component divisors, and which group goes first.
struct BlowupSchedule {
  enum class Diagonals { descending, ascending };
  enum class Components { lex, reverse, none };
  Diagonals diagonals = Diagonals::descending;
  Components components = Components::lex;
  bool diagonals_first = true;

  static BlowupSchedule paper() { return {}; }
  friend bool operator==(const BlowupSchedule&, const BlowupSchedule&) = default;
};

/// The collection over the label indices induced by blowing up, in schedule
/// order, the diagonals and the divisors [u_j] x C_1, [u_j] x C_2 at a
/// special point paired with `node`.
SubsetCollection induced_collection(const SpecialPointData& point, int node,
                                    const BlowupSchedule& schedule);

/// Ordering rule taken from a_order of the induced collection. Throws
/// InvalidOrder when the collection is not smooth.
OrderingRule schedule_ordering(const BlowupSchedule& schedule);

}  // namespace abelmap
