#pragma once

// Dual-graph model of nodal curves: subcurves, polarizations, multidegrees,
// P-quasistability and the twist lattice acting on multidegrees.
//
// Components and nodes are indexed from 0 in the API. File formats and the
// CLI use 1-based indices; conversion happens in io.hpp.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "abelmap/rational.hpp"

namespace abelmap {

/// A nonempty proper set of components, stored as a bit mask (p <= 62).
struct Subcurve {
  std::uint64_t members = 0;

  bool contains(int component) const { return (members >> component) & 1U; }
  int size() const;
  Subcurve complement(int components) const;
  std::vector<int> component_list() const;

  friend bool operator==(const Subcurve&, const Subcurve&) = default;
};

/// Deterministic order: by size, then by the sorted member list.
bool subcurve_less(const Subcurve& a, const Subcurve& b);

class DualGraph {
 public:
  /// An unordered pair of distinct components joined by a node.
  using Node = std::pair<int, int>;

  /// Throws InvalidInput unless the graph is connected, loop free and
  /// `marked` is a valid component.
  DualGraph(int components, std::vector<Node> nodes, int marked);

  int components() const { return components_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int index) const { return nodes_.at(index); }
  int marked() const { return marked_; }

  /// C_r . C_i: number of nodes joining r and i, or minus the number of
  /// nodes on C_i when r == i.
  int intersection(int r, int i) const;

  /// k_Y, the number of nodes with exactly one endpoint in Y.
  int boundary_count(Subcurve y) const;
  bool on_boundary(int node, Subcurve y) const;
  bool is_connected(Subcurve y) const;

 private:
  int components_;
  std::vector<Node> nodes_;
  int marked_;
  std::vector<int> intersection_;  // row-major p x p
};

class Polarization {
 public:
  /// Throws InvalidInput if the weights do not sum to an integer.
  explicit Polarization(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  Integer total() const { return total_; }
  Rational on(Subcurve y) const;

 private:
  std::vector<Rational> weights_;
  Integer total_;
};

struct Multidegree {
  std::vector<Integer> degs;

  Integer total() const;
  Integer on(Subcurve y) const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

/// Integer coefficients of a twister sum_i coeffs[i] * C_i on the total space.
struct TwistVector {
  std::vector<Integer> coeffs;

  /// Representative with minimum coefficient 0.
  TwistVector canonical() const;

  friend bool operator==(const TwistVector&, const TwistVector&) = default;
  friend auto operator<=>(const TwistVector&, const TwistVector&) = default;
};

struct QuasistabilityResult {
  bool quasistable = true;
  std::optional<Subcurve> witness;

  explicit operator bool() const { return quasistable; }
};

/// Subcurves Y with Y and Y^c connected, in subcurve_less order.
std::vector<Subcurve> admissible_subcurves(const DualGraph& graph);

/// Every nonempty proper subcurve, in subcurve_less order.
std::vector<Subcurve> all_proper_subcurves(const DualGraph& graph);

/// The quasistability inequality over a single subcurve. Strictness of each
/// side depends on whether the marked component lies in Y.
bool quasistable_over(const DualGraph& graph, const Polarization& pol,
                      const Multidegree& md, Subcurve y);

/// Checks every admissible subcurve; the witness is the first violation.
/// Throws DegreeMismatch when md.total() != pol.total().
QuasistabilityResult is_quasistable(const DualGraph& graph, const Polarization& pol,
                                    const Multidegree& md);

/// Same check against a caller-supplied list of subcurves.
QuasistabilityResult is_quasistable(const DualGraph& graph, const Polarization& pol,
                                    const Multidegree& md, std::span<const Subcurve> subcurves);

/// Multidegree of L(-Z): degs_i - sum_r coeffs_r (C_r . C_i).
Multidegree twist_action(const DualGraph& graph, const Multidegree& md, const TwistVector& twist);

/// Default bound on the largest canonical coefficient explored by the search.
Integer default_search_bound(const Polarization& pol, const Multidegree& md, int components);

/// Breadth-first search over canonical twists for the quasistable
/// representative of md. Throws DegreeMismatch or SearchExhausted.
TwistVector quasistable_twist_search(const DualGraph& graph, const Polarization& pol,
                                     const Multidegree& md,
                                     std::optional<Integer> bound = std::nullopt);

}  // namespace abelmap
