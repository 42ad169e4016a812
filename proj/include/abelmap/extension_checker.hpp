#pragma once

// Numerical sufficient conditions for the Abel map to extend over a local
// base S = Spec K[[u_1, ..., u_n]] with t = u_1 ... u_n, and their
// verification at every special point of a two-component curve.
//
// Index conventions: generic points Q_j and nodes are 0-based.

#include <cstdint>
#include <optional>
#include <vector>

#include "abelmap/curve_model.hpp"
#include "abelmap/local_blowup.hpp"
#include "abelmap/special_points.hpp"

namespace abelmap {

/// A section through `node`. Over the generic point Q_j it lies on the
/// node's first-listed component iff j is in branch_set, else on the second.
struct SectionData {
  int node = 0;
  IndexSet branch_set;
};

/// Line bundle, polarization and sections of the local problem.
struct LocalProblem {
  DualGraph graph;
  Polarization pol;
  Multidegree line_bundle;
  int generic_points = 1;  // n = d + 1
  std::vector<SectionData> sections;
  int marked_multiplicity = 0;  // m in L(m sigma - sum delta_k)

  void validate() const;
};

/// Component carrying section s over Q_j.
int section_component(const DualGraph& graph, const SectionData& section, int j);

/// Number of sections at `node` lying on Y^c over Q_j.
Integer compute_a_general(const DualGraph& graph, const std::vector<SectionData>& sections,
                          Subcurve y, int j, int node);

/// Multidegree of M_j = L(m sigma - sum delta_k) on the fiber over Q_j.
Multidegree generic_fiber_multidegree(const LocalProblem& problem, int j);

/// Canonical twist making M_j quasistable. Propagates SearchExhausted.
TwistVector generic_twist(const LocalProblem& problem, int j);

/// b = l_{outside} - l_{inside} for a node on the boundary of Y, else 0;
/// with this sign, sum_N b^N_j(Y) = Z_j . Y.
Integer b_from_twist(const DualGraph& graph, const TwistVector& twist, Subcurve y, int node);

Integer compute_b_general(const LocalProblem& problem, Subcurve y, int node, int j);

enum class Condition2Mode { brute, separable };

/// Failure witness for either condition.
struct Witness {
  Subcurve subcurve;
  int node = -1;        // condition 1
  int j1 = -1;          // condition 1
  int j2 = -1;          // condition 1
  std::vector<int> function;  // condition 2: j(N) per node
  Rational value;       // condition 2: the offending sum
};

struct ConditionResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

// General curves: every admissible Y containing the marked component.
ConditionResult check_condition1(const LocalProblem& problem);
ConditionResult check_condition2(const LocalProblem& problem, Condition2Mode mode);

/// The generic-point inequality for the constant function h.
/// Throws InvalidInput if Y does not contain the marked component.
bool check_generic_bound(const LocalProblem& problem, Subcurve y, int h);

/// Degrees and polarization of a two-component curve, marked on C_1.
struct TwoComponentData {
  int q = 1;
  Integer deg_c1 = 0;
  Integer deg_c2 = 0;
  Rational e_c1;
  Rational e_c2;

  /// Throws InvalidInput on a degree mismatch or q < 1.
  void validate() const;
};

/// Sections at a special point: delta_k through node l_k, on C_1 over Q_j
/// iff u_j(k) = 1.
std::vector<SectionData> sections_from_special_point(const SpecialPointData& point);

/// The general local problem for a special point (Y = C_1 is the only
/// subcurve containing the marked point).
LocalProblem two_component_problem(const SpecialPointData& point, const TwoComponentData& data);

// Two-component fast path, Y = C_1, using the closed formula for b.
ConditionResult check_condition1(const SpecialPointData& point, const TwoComponentData& data);
ConditionResult check_condition2(const SpecialPointData& point, const TwoComponentData& data,
                                 Condition2Mode mode);

struct VerifyParams {
  int d = 1;
  TwoComponentData data;
  std::optional<BlowupSchedule> schedule;  // nullopt: the ell-ordering rule
  Condition2Mode mode = Condition2Mode::separable;
  int shards = 1;
};

struct PointFailure {
  std::uint64_t index = 0;  // position in the stable enumeration order
  SpecialPointData point;
  int condition = 1;
  Witness witness;
};

struct ExtensionReport {
  VerifyParams params;
  std::uint64_t points = 0;
  std::vector<PointFailure> failures;  // sorted by index, then condition

  bool verdict() const { return failures.empty(); }
};

/// Enumerates the special points under the chosen order and checks both
/// conditions at each. A failure means the sufficient conditions are not met.
/// Throws InvalidInput or InvalidOrder.
ExtensionReport verify_extension(const VerifyParams& params);

}  // namespace abelmap
