#include "abelmap/extension_checker.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "abelmap/errors.hpp"

namespace abelmap {

void LocalProblem::validate() const {
  const auto p = static_cast<std::size_t>(graph.components());
  if (pol.weights().size() != p || line_bundle.degs.size() != p) {
    throw InvalidInput("line bundle/polarization length does not match component count");
  }
  if (line_bundle.total() != pol.total()) {
    throw InvalidInput("line bundle degree differs from polarization degree");
  }
  if (generic_points < 1 || generic_points > 63) throw InvalidInput("generic point count out of range");
  const IndexSet all = IndexSet::full(generic_points);
  for (const auto& s : sections) {
    if (s.node < 0 || s.node >= graph.node_count()) throw InvalidInput("section node out of range");
    if ((s.branch_set.bits & ~all.bits) != 0) throw InvalidInput("section branch set outside F");
  }
}

int section_component(const DualGraph& graph, const SectionData& section, int j) {
  const auto [r, s] = graph.node(section.node);
  return section.branch_set.contains(j) ? r : s;
}

Integer compute_a_general(const DualGraph& graph, const std::vector<SectionData>& sections,
                          Subcurve y, int j, int node) {
  Integer count = 0;
  for (const auto& s : sections) {
    if (s.node == node && !y.contains(section_component(graph, s, j))) ++count;
  }
  return count;
}

Multidegree generic_fiber_multidegree(const LocalProblem& problem, int j) {
  Multidegree md = problem.line_bundle;
  md.degs[problem.graph.marked()] += problem.marked_multiplicity;
  for (const auto& s : problem.sections) md.degs[section_component(problem.graph, s, j)] -= 1;
  return md;
}

TwistVector generic_twist(const LocalProblem& problem, int j) {
  return quasistable_twist_search(problem.graph, problem.pol, generic_fiber_multidegree(problem, j));
}

Integer b_from_twist(const DualGraph& graph, const TwistVector& twist, Subcurve y, int node) {
  if (!graph.on_boundary(node, y)) return 0;
  auto [inside, outside] = graph.node(node);
  if (!y.contains(inside)) std::swap(inside, outside);
  return twist.coeffs[outside] - twist.coeffs[inside];
}

Integer compute_b_general(const LocalProblem& problem, Subcurve y, int node, int j) {
  if (!problem.graph.on_boundary(node, y)) return 0;
  return b_from_twist(problem.graph, generic_twist(problem, j), y, node);
}

namespace {

/// F_N(j) = a^N_j(Y) - b^N_j(Y) for one subcurve Y.
struct SubcurveTable {
  Subcurve y;
  Rational base;  // deg L|_Y - e_Y
  int k = 0;
  std::vector<bool> boundary;
  std::vector<std::vector<Integer>> f;  // [node][j]
};

bool within_bounds(const Rational& value, int k) {
  const Rational half(k, 2);
  return -half < value && value <= half;
}

ConditionResult condition1_on(const SubcurveTable& t) {
  for (std::size_t node = 0; node < t.f.size(); ++node) {
    if (!t.boundary[node]) continue;
    const auto& f = t.f[node];
    for (std::size_t j1 = 0; j1 < f.size(); ++j1) {
      for (std::size_t j2 = 0; j2 < f.size(); ++j2) {
        if (f[j1] - f[j2] > 1 || f[j2] - f[j1] > 1) {
          Witness w;
          w.subcurve = t.y;
          w.node = static_cast<int>(node);
          w.j1 = static_cast<int>(j1);
          w.j2 = static_cast<int>(j2);
          return {false, w};
        }
      }
    }
  }
  return {};
}

ConditionResult condition2_on(const SubcurveTable& t, Condition2Mode mode) {
  const std::size_t nodes = t.f.size();
  const std::size_t n = nodes == 0 ? 1 : t.f.front().size();
  auto failure = [&](std::vector<int> function, const Rational& value) {
    Witness w;
    w.subcurve = t.y;
    w.function = std::move(function);
    w.value = value;
    return ConditionResult{false, w};
  };

  if (mode == Condition2Mode::brute) {
    std::vector<int> function(nodes, 0);
    while (true) {
      Rational value = t.base;
      for (std::size_t node = 0; node < nodes; ++node) value += t.f[node][function[node]];
      if (!within_bounds(value, t.k)) return failure(function, value);
      std::size_t pos = 0;
      while (pos < nodes && function[pos] == static_cast<int>(n) - 1) function[pos++] = 0;
      if (pos == nodes) break;
      ++function[pos];
    }
    return {};
  }

  // F is a sum of independent per-node terms: only the extreme sums matter.
  std::vector<int> low(nodes), high(nodes);
  Rational min_value = t.base, max_value = t.base;
  for (std::size_t node = 0; node < nodes; ++node) {
    const auto& f = t.f[node];
    low[node] = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
    high[node] = static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());
    min_value += f[low[node]];
    max_value += f[high[node]];
  }
  if (!within_bounds(min_value, t.k)) return failure(low, min_value);
  if (!within_bounds(max_value, t.k)) return failure(high, max_value);
  return {};
}

std::vector<SubcurveTable> general_tables(const LocalProblem& problem) {
  problem.validate();
  const auto& g = problem.graph;
  std::vector<TwistVector> twists;
  for (int j = 0; j < problem.generic_points; ++j) twists.push_back(generic_twist(problem, j));

  std::vector<SubcurveTable> tables;
  for (const auto& y : admissible_subcurves(g)) {
    if (!y.contains(g.marked())) continue;
    SubcurveTable t;
    t.y = y;
    t.base = Rational(problem.line_bundle.on(y)) - problem.pol.on(y);
    t.k = g.boundary_count(y);
    for (int node = 0; node < g.node_count(); ++node) {
      t.boundary.push_back(g.on_boundary(node, y));
      std::vector<Integer> f;
      for (int j = 0; j < problem.generic_points; ++j) {
        f.push_back(compute_a_general(g, problem.sections, y, j, node) -
                    b_from_twist(g, twists[j], y, node));
      }
      t.f.push_back(std::move(f));
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

SubcurveTable two_component_table(const SpecialPointData& point, const TwoComponentData& data) {
  data.validate();
  point.validate(data.q);
  const int n = static_cast<int>(point.labels.size());
  SubcurveTable t;
  t.y = Subcurve{1};
  t.base = Rational(data.deg_c1) - data.e_c1;
  t.k = data.q;
  t.boundary.assign(static_cast<std::size_t>(data.q), true);
  t.f.assign(static_cast<std::size_t>(data.q), std::vector<Integer>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) {
    const AVector a = a_vector(point, j, data.q);
    const Integer b = b_from_count(a.total, data.deg_c2, data.e_c2, data.q);
    for (int l = 0; l < data.q; ++l) t.f[l][j] = a.per_node[l] - b;
  }
  return t;
}

}  // namespace

ConditionResult check_condition1(const LocalProblem& problem) {
  for (const auto& t : general_tables(problem)) {
    if (auto r = condition1_on(t); !r) return r;
  }
  return {};
}

ConditionResult check_condition2(const LocalProblem& problem, Condition2Mode mode) {
  for (const auto& t : general_tables(problem)) {
    if (auto r = condition2_on(t, mode); !r) return r;
  }
  return {};
}

bool check_generic_bound(const LocalProblem& problem, Subcurve y, int h) {
  problem.validate();
  const auto& g = problem.graph;
  if (!y.contains(g.marked())) throw InvalidInput("subcurve must contain the marked component");
  const TwistVector twist = generic_twist(problem, h);
  Rational value = Rational(problem.line_bundle.on(y)) - problem.pol.on(y);
  for (int node = 0; node < g.node_count(); ++node) {
    value += compute_a_general(g, problem.sections, y, h, node) - b_from_twist(g, twist, y, node);
  }
  return within_bounds(value, g.boundary_count(y));
}

void TwoComponentData::validate() const {
  if (q < 1) throw InvalidInput("node count q must be at least 1");
  if (!is_integer(e_c1 + e_c2) || (e_c1 + e_c2).numerator() != deg_c1 + deg_c2) {
    throw InvalidInput("polarization must sum to the degree of L");
  }
}

std::vector<SectionData> sections_from_special_point(const SpecialPointData& point) {
  std::vector<SectionData> sections;
  for (int k = 0; k < point.degree(); ++k) {
    SectionData s{point.ells[k], {}};
    for (int j = 0; j < static_cast<int>(point.labels.size()); ++j) {
      if (point.labels[j].letter(k) == 1) s.branch_set.insert(j);
    }
    sections.push_back(s);
  }
  return sections;
}

LocalProblem two_component_problem(const SpecialPointData& point, const TwoComponentData& data) {
  data.validate();
  point.validate(data.q);
  std::vector<DualGraph::Node> nodes(static_cast<std::size_t>(data.q), {0, 1});
  LocalProblem problem{DualGraph(2, std::move(nodes), 0),
                       Polarization({data.e_c1, data.e_c2}),
                       Multidegree{{data.deg_c1, data.deg_c2}},
                       point.degree() + 1,
                       sections_from_special_point(point),
                       point.degree()};
  return problem;
}

ConditionResult check_condition1(const SpecialPointData& point, const TwoComponentData& data) {
  return condition1_on(two_component_table(point, data));
}

ConditionResult check_condition2(const SpecialPointData& point, const TwoComponentData& data,
                                 Condition2Mode mode) {
  return condition2_on(two_component_table(point, data), mode);
}

ExtensionReport verify_extension(const VerifyParams& params) {
  if (params.d < 1) throw InvalidInput("degree d must be at least 1");
  if (params.shards < 1) throw InvalidInput("shard count must be at least 1");
  params.data.validate();
  const int d = params.d;
  const int q = params.data.q;
  const OrderingRule rule =
      params.schedule ? schedule_ordering(*params.schedule) : OrderingRule(ell_order);

  std::uint64_t tuples = 1;
  std::uint64_t per_tuple = 1;
  for (int k = 1; k <= d; ++k) {
    tuples *= static_cast<std::uint64_t>(q);
    per_tuple *= static_cast<std::uint64_t>(k);
  }

  ExtensionReport report{params, tuples * per_tuple, {}};
  std::mutex guard;
  std::exception_ptr error;

  auto worker = [&](int shard) {
    std::vector<PointFailure> local;
    try {
      for (std::uint64_t t = static_cast<std::uint64_t>(shard); t < tuples;
           t += static_cast<std::uint64_t>(params.shards)) {
        std::vector<int> ells(static_cast<std::size_t>(d));
        std::uint64_t rest = t;
        for (int k = d - 1; k >= 0; --k) {
          ells[k] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
          rest /= static_cast<std::uint64_t>(q);
        }
        std::uint64_t index = t * per_tuple;
        for_each_special_point_over(ells, rule, [&](const SpecialPointData& point) {
          const auto table = two_component_table(point, params.data);
          if (auto r = condition1_on(table); !r) local.push_back({index, point, 1, *r.witness});
          if (auto r = condition2_on(table, params.mode); !r) {
            local.push_back({index, point, 2, *r.witness});
          }
          ++index;
        });
      }
    } catch (...) {
      std::lock_guard lock(guard);
      if (!error) error = std::current_exception();
    }
    std::lock_guard lock(guard);
    report.failures.insert(report.failures.end(), std::make_move_iterator(local.begin()),
                           std::make_move_iterator(local.end()));
  };

  if (params.shards == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (int s = 0; s < params.shards; ++s) threads.emplace_back(worker, s);
  }
  if (error) std::rethrow_exception(error);

  std::sort(report.failures.begin(), report.failures.end(),
            [](const PointFailure& a, const PointFailure& b) {
              return std::tie(a.index, a.condition) < std::tie(b.index, b.condition);
            });
  return report;
}

}  // namespace abelmap
