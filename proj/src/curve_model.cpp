#include "abelmap/curve_model.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <string>

#include "abelmap/errors.hpp"

namespace abelmap {

int Subcurve::size() const { return std::popcount(members); }

Subcurve Subcurve::complement(int components) const {
  const std::uint64_t all = (components >= 64) ? ~0ULL : ((1ULL << components) - 1);
  return Subcurve{all & ~members};
}

std::vector<int> Subcurve::component_list() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool subcurve_less(const Subcurve& a, const Subcurve& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.component_list() < b.component_list();
}

DualGraph::DualGraph(int components, std::vector<Node> nodes, int marked)
    : components_(components), nodes_(std::move(nodes)), marked_(marked) {
  if (components_ < 1 || components_ > 62) {
    throw InvalidInput("component count must lie in [1, 62], got " + std::to_string(components_));
  }
  if (marked_ < 0 || marked_ >= components_) throw InvalidInput("marked component out of range");
  intersection_.assign(static_cast<std::size_t>(components_ * components_), 0);
  for (auto& [r, s] : nodes_) {
    if (r < 0 || s < 0 || r >= components_ || s >= components_) {
      throw InvalidInput("node endpoint out of range");
    }
    if (r == s) throw InvalidInput("internal nodes (loops) are not supported");
    intersection_[r * components_ + s] += 1;
    intersection_[s * components_ + r] += 1;
    intersection_[r * components_ + r] -= 1;
    intersection_[s * components_ + s] -= 1;
  }
  const std::uint64_t all = (1ULL << components_) - 1;
  if (!is_connected(Subcurve{all})) throw InvalidInput("dual graph is not connected");
}

int DualGraph::intersection(int r, int i) const { return intersection_[r * components_ + i]; }

bool DualGraph::on_boundary(int node, Subcurve y) const {
  const auto& [r, s] = nodes_[node];
  return y.contains(r) != y.contains(s);
}

int DualGraph::boundary_count(Subcurve y) const {
  int count = 0;
  for (int n = 0; n < node_count(); ++n) count += on_boundary(n, y) ? 1 : 0;
  return count;
}

bool DualGraph::is_connected(Subcurve y) const {
  if (y.members == 0) return false;
  std::uint64_t reached = 1ULL << std::countr_zero(y.members);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [r, s] : nodes_) {
      if (!y.contains(r) || !y.contains(s)) continue;
      const bool has_r = (reached >> r) & 1U;
      const bool has_s = (reached >> s) & 1U;
      if (has_r != has_s) {
        reached |= (1ULL << r) | (1ULL << s);
        grew = true;
      }
    }
  }
  return reached == y.members;
}

Polarization::Polarization(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Rational sum = 0;
  for (const auto& w : weights_) sum += w;
  if (!is_integer(sum)) {
    throw InvalidInput("polarization weights sum to non-integer " + to_string(sum));
  }
  total_ = sum.numerator();
}

Rational Polarization::on(Subcurve y) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (y.contains(static_cast<int>(i))) sum += weights_[i];
  }
  return sum;
}

Integer Multidegree::total() const {
  Integer sum = 0;
  for (auto d : degs) sum += d;
  return sum;
}

Integer Multidegree::on(Subcurve y) const {
  Integer sum = 0;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (y.contains(static_cast<int>(i))) sum += degs[i];
  }
  return sum;
}

TwistVector TwistVector::canonical() const {
  if (coeffs.empty()) return *this;
  const Integer low = *std::min_element(coeffs.begin(), coeffs.end());
  TwistVector out = *this;
  for (auto& c : out.coeffs) c -= low;
  return out;
}

namespace {

template <typename Keep>
std::vector<Subcurve> proper_subcurves(const DualGraph& graph, Keep keep) {
  const int p = graph.components();
  std::vector<Subcurve> out;
  if (p < 2) return out;
  const std::uint64_t all = (1ULL << p) - 1;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    const Subcurve y{mask};
    if (keep(y)) out.push_back(y);
  }
  std::sort(out.begin(), out.end(), subcurve_less);
  return out;
}

void check_sizes(const DualGraph& graph, const Polarization& pol, const Multidegree& md) {
  const auto p = static_cast<std::size_t>(graph.components());
  if (pol.weights().size() != p || md.degs.size() != p) {
    throw InvalidInput("polarization/multidegree length does not match component count");
  }
  if (md.total() != pol.total()) {
    throw DegreeMismatch("multidegree total " + std::to_string(md.total()) +
                         " differs from polarization degree " + std::to_string(pol.total()));
  }
}

}  // namespace

std::vector<Subcurve> admissible_subcurves(const DualGraph& graph) {
  const int p = graph.components();
  return proper_subcurves(graph, [&](Subcurve y) {
    return graph.is_connected(y) && graph.is_connected(y.complement(p));
  });
}

std::vector<Subcurve> all_proper_subcurves(const DualGraph& graph) {
  return proper_subcurves(graph, [](Subcurve) { return true; });
}

bool quasistable_over(const DualGraph& graph, const Polarization& pol, const Multidegree& md,
                      Subcurve y) {
  const Rational half_k(graph.boundary_count(y), 2);
  const Rational excess = Rational(md.on(y)) - pol.on(y);
  if (y.contains(graph.marked())) return -half_k < excess && excess <= half_k;
  return -half_k <= excess && excess < half_k;
}

QuasistabilityResult is_quasistable(const DualGraph& graph, const Polarization& pol,
                                    const Multidegree& md, std::span<const Subcurve> subcurves) {
  check_sizes(graph, pol, md);
  for (const auto& y : subcurves) {
    if (!quasistable_over(graph, pol, md, y)) return {false, y};
  }
  return {};
}

QuasistabilityResult is_quasistable(const DualGraph& graph, const Polarization& pol,
                                    const Multidegree& md) {
  const auto subcurves = admissible_subcurves(graph);
  return is_quasistable(graph, pol, md, subcurves);
}

Multidegree twist_action(const DualGraph& graph, const Multidegree& md, const TwistVector& twist) {
  const int p = graph.components();
  if (md.degs.size() != static_cast<std::size_t>(p) ||
      twist.coeffs.size() != static_cast<std::size_t>(p)) {
    throw InvalidInput("twist/multidegree length does not match component count");
  }
  Multidegree out = md;
  for (int i = 0; i < p; ++i) {
    for (int r = 0; r < p; ++r) out.degs[i] -= twist.coeffs[r] * graph.intersection(r, i);
  }
  return out;
}

Integer default_search_bound(const Polarization& pol, const Multidegree& md, int components) {
  Integer weight_bound = 0;
  for (const auto& w : pol.weights()) weight_bound = std::max(weight_bound, ceil(abs(w)));
  Integer degree_bound = 0;
  for (auto d : md.degs) degree_bound = std::max(degree_bound, d < 0 ? -d : d);
  return 2 * (weight_bound + degree_bound) + components;
}

TwistVector quasistable_twist_search(const DualGraph& graph, const Polarization& pol,
                                     const Multidegree& md, std::optional<Integer> bound) {
  check_sizes(graph, pol, md);
  const int p = graph.components();
  const Integer limit = bound.value_or(default_search_bound(pol, md, p));
  const auto subcurves = admissible_subcurves(graph);

  TwistVector start{std::vector<Integer>(static_cast<std::size_t>(p), 0)};
  std::set<TwistVector> seen{start};
  std::deque<TwistVector> frontier{start};
  while (!frontier.empty()) {
    TwistVector current = std::move(frontier.front());
    frontier.pop_front();
    if (is_quasistable(graph, pol, twist_action(graph, md, current), subcurves)) return current;
    for (int i = 0; i < p; ++i) {
      for (Integer step : {Integer{1}, Integer{-1}}) {
        TwistVector next = current;
        next.coeffs[i] += step;
        next = next.canonical();
        if (*std::max_element(next.coeffs.begin(), next.coeffs.end()) > limit) continue;
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  throw SearchExhausted("no quasistable twist with coefficients <= " + std::to_string(limit));
}

}  // namespace abelmap
