#pragma once

// The curve C(d): every node of a base curve replaced by a chain of d
// rational curves E_1..E_d, ordered from the node's first endpoint towards
// its second. Degree bookkeeping for admissible line bundles on C(d) and the
// iterative twisting that makes them quasistable.

#include <optional>
#include <span>
#include <vector>

#include "abelmap/curve_model.hpp"

namespace abelmap {

struct ChainMarkedCurve {
  DualGraph base;
  int chain_len = 0;
  std::vector<Integer> base_degs;
  std::vector<std::vector<Integer>> chain_degs;  // one vector of length chain_len per node

  /// Throws InvalidInput on length mismatches.
  void validate() const;
  Integer total_degree() const;

  /// Index of E_{position} over `node` among the components of C(d).
  int exceptional_index(int node, int position) const {
    return base.components() + node * chain_len + position;
  }
};

/// Closed interval [first, last] of chain positions.
struct ChainWindow {
  int first = 0;
  int last = 0;

  bool strictly_inside(const ChainWindow& outer) const {
    return outer.first <= first && last <= outer.last && (outer.first < first || last < outer.last);
  }
  friend bool operator==(const ChainWindow&, const ChainWindow&) = default;
};

/// Multiplicity of each exceptional component in Z = sum_i Z_i.
struct TwisterZ {
  std::vector<std::vector<Integer>> multiplicity;  // [node][position]
};

struct SemistabilizationResult {
  TwisterZ twister;
  ChainMarkedCurve curve;
  /// windows[i][node] is W_{E,i+1} for that node's chain, if nonempty.
  std::vector<std::vector<std::optional<ChainWindow>>> windows;
};

/// The dual graph of C(d); the marked point stays on its base component.
DualGraph expanded_graph(const ChainMarkedCurve& curve);
Multidegree expanded_multidegree(const ChainMarkedCurve& curve);

/// e(d): base weights unchanged, 0 on every exceptional component.
Polarization induced_polarization(const Polarization& pol, const DualGraph& base, int chain_len);

/// Every connected subchain has total degree in {-1, 0, 1}.
bool is_admissible_chain(std::span<const Integer> chain);
bool is_admissible(const ChainMarkedCurve& curve);

/// Inclusion-maximal connected subchain of total degree exactly 1, or nullopt.
/// Throws AmbiguousMaximalSubchain if there are two incomparable maxima.
std::optional<ChainWindow> maximal_degree_one_subchain(std::span<const Integer> chain);

/// Repeatedly twists by the maximal degree-1 subchains until none is left.
/// Throws NotAdmissible or AmbiguousMaximalSubchain.
SemistabilizationResult semistabilize(const ChainMarkedCurve& curve);

struct PushforwardCheck {
  bool admissible = false;
  /// Hypotheses hold: admissible and quasistable on every non-contracted
  /// admissible subcurve of C(d).
  bool hypotheses = false;
  std::optional<Subcurve> witness;  // violating subcurve of C(d)
};

/// Hypothesis check for the pushforward phi_*(L) to be P-quasistable. When
/// the hypotheses hold, also confirms that the semistabilized bundle is
/// quasistable on C(d); a failure there throws std::logic_error.
PushforwardCheck check_pushforward(const ChainMarkedCurve& curve, const Polarization& pol);

inline bool pushforward_quasistable(const ChainMarkedCurve& curve, const Polarization& pol) {
  return check_pushforward(curve, pol).hypotheses;
}

}  // namespace abelmap
