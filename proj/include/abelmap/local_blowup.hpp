#pragma once

// Combinatorics of blowing up the local model xy = u_1 ... u_n along Weil
// divisors V(x, u_A). A blowup sequence is a SubsetCollection over the index
// set F = {0, ..., n-1}; the resulting exceptional chain carries nodes
// N_0, ..., N_{n-1} from the y = 0 branch to the x = 0 branch.

#include <cstdint>
#include <vector>

namespace abelmap {

/// Subset of a small index set {0, ..., n-1}, n <= 63.
struct IndexSet {
  std::uint64_t bits = 0;

  static IndexSet of(std::initializer_list<int> elements);
  static IndexSet full(int n) { return IndexSet{(n >= 64) ? ~0ULL : ((1ULL << n) - 1)}; }

  bool contains(int i) const { return (bits >> i) & 1U; }
  void insert(int i) { bits |= 1ULL << i; }
  int size() const;
  bool empty() const { return bits == 0; }
  IndexSet complement(int n) const { return IndexSet{full(n).bits & ~bits}; }
  IndexSet intersect(IndexSet other) const { return IndexSet{bits & other.bits}; }
  /// Members in increasing order.
  std::vector<int> elements() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
};

struct SubsetCollection {
  int n = 0;  // |F|
  std::vector<IndexSet> sets;

  /// Throws InvalidInput unless every set is a nonempty proper subset of F.
  void validate() const;

  /// Keeps only the nonempty proper sets, in order. Empty centres are empty
  /// divisors and full ones are Cartier, so neither changes the blowup.
  static SubsetCollection dropping_trivial(int n, const std::vector<IndexSet>& sets);
};

struct BlowupDivisor {
  enum class Kind { x_side, y_side, diagonal };
  Kind kind = Kind::x_side;
  IndexSet set;
};

/// The set A with V(x, u_A) giving the same blowup. V(y, u_B) is V(x, u_{B^c});
/// V(x - u_{A^c}, y - u_A) is V(x, u_A).
IndexSet normalize_divisor(const BlowupDivisor& divisor, int n);

bool is_smooth_collection(const SubsetCollection& col);

/// m <_A n: the first set separating m and n contains m. Returns false when
/// no set separates them.
bool a_less(const SubsetCollection& col, int m, int n);

/// eta with eta(0) <_A eta(1) <_A ... Throws NotSmooth.
std::vector<int> a_order(const SubsetCollection& col);

/// Node N_i lies on the singular-locus component Sigma_{eta(i)}; the result is
/// eta itself. Throws NotSmooth.
std::vector<int> node_sigma_assignment(const SubsetCollection& col);

struct NodeIncidence {
  IndexSet x_side;  // j with N_i on the strict transform of V(x, u_j)
  IndexSet y_side;  // j with N_i on the strict transform of V(y, u_j)
};

/// Throws NotSmooth, or InvalidInput if node is out of range.
NodeIncidence strict_transform_incidence(const SubsetCollection& col, int node);

struct ChartChain {
  std::vector<int> order;      // indices in the order their nodes occur on the chain
  int exceptional_curves = 0;  // number of rational curves over the closed point
};

/// Recomputes the node assignment by recursing into the two charts of the
/// first blowup: U with (A_1 cap A_i) over A_1 and V with (A_1^c cap A_i) over
/// A_1^c, joined by the new exceptional curve. Throws NotSmooth.
ChartChain chart_recursion_oracle(const SubsetCollection& col);

/// Length of the exceptional chain after inverting u_A, i.e. over the
/// localisation where only the indices outside A vanish.
int localized_chain_length(const SubsetCollection& col, IndexSet inverted);

}  // namespace abelmap
