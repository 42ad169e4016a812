#include "abelmap/chain_curves.hpp"

#include <stdexcept>
#include <string>

#include "abelmap/errors.hpp"

namespace abelmap {

void ChainMarkedCurve::validate() const {
  if (chain_len < 0) throw InvalidInput("chain length must be non-negative");
  if (base_degs.size() != static_cast<std::size_t>(base.components())) {
    throw InvalidInput("base_degs length does not match component count");
  }
  if (chain_degs.size() != static_cast<std::size_t>(base.node_count())) {
    throw InvalidInput("chain_degs must have one entry per node");
  }
  for (const auto& chain : chain_degs) {
    if (chain.size() != static_cast<std::size_t>(chain_len)) {
      throw InvalidInput("chain of length " + std::to_string(chain.size()) + ", expected " +
                         std::to_string(chain_len));
    }
  }
}

Integer ChainMarkedCurve::total_degree() const {
  Integer sum = 0;
  for (auto d : base_degs) sum += d;
  for (const auto& chain : chain_degs) {
    for (auto d : chain) sum += d;
  }
  return sum;
}

DualGraph expanded_graph(const ChainMarkedCurve& curve) {
  curve.validate();
  const int d = curve.chain_len;
  std::vector<DualGraph::Node> nodes;
  for (int n = 0; n < curve.base.node_count(); ++n) {
    const auto [r, s] = curve.base.node(n);
    if (d == 0) {
      nodes.emplace_back(r, s);
      continue;
    }
    nodes.emplace_back(r, curve.exceptional_index(n, 0));
    for (int k = 0; k + 1 < d; ++k) {
      nodes.emplace_back(curve.exceptional_index(n, k), curve.exceptional_index(n, k + 1));
    }
    nodes.emplace_back(curve.exceptional_index(n, d - 1), s);
  }
  const int components = curve.base.components() + curve.base.node_count() * d;
  return DualGraph(components, std::move(nodes), curve.base.marked());
}

Multidegree expanded_multidegree(const ChainMarkedCurve& curve) {
  curve.validate();
  Multidegree md{curve.base_degs};
  for (const auto& chain : curve.chain_degs) md.degs.insert(md.degs.end(), chain.begin(), chain.end());
  return md;
}

Polarization induced_polarization(const Polarization& pol, const DualGraph& base, int chain_len) {
  std::vector<Rational> weights = pol.weights();
  weights.resize(weights.size() + static_cast<std::size_t>(base.node_count() * chain_len), 0);
  return Polarization(std::move(weights));
}

bool is_admissible_chain(std::span<const Integer> chain) {
  for (std::size_t a = 0; a < chain.size(); ++a) {
    Integer sum = 0;
    for (std::size_t b = a; b < chain.size(); ++b) {
      sum += chain[b];
      if (sum < -1 || sum > 1) return false;
    }
  }
  return true;
}

bool is_admissible(const ChainMarkedCurve& curve) {
  curve.validate();
  for (const auto& chain : curve.chain_degs) {
    if (!is_admissible_chain(chain)) return false;
  }
  return true;
}

std::optional<ChainWindow> maximal_degree_one_subchain(std::span<const Integer> chain) {
  std::vector<ChainWindow> candidates;
  const int d = static_cast<int>(chain.size());
  for (int a = 0; a < d; ++a) {
    Integer sum = 0;
    for (int b = a; b < d; ++b) {
      sum += chain[b];
      if (sum == 1) candidates.push_back({a, b});
    }
  }
  std::vector<ChainWindow> maxima;
  for (const auto& w : candidates) {
    bool dominated = false;
    for (const auto& other : candidates) dominated = dominated || w.strictly_inside(other);
    if (!dominated) maxima.push_back(w);
  }
  if (maxima.empty()) return std::nullopt;
  if (maxima.size() > 1) {
    throw AmbiguousMaximalSubchain("chain has " + std::to_string(maxima.size()) +
                                   " incomparable maximal degree-1 subchains");
  }
  return maxima.front();
}

SemistabilizationResult semistabilize(const ChainMarkedCurve& curve) {
  if (!is_admissible(curve)) throw NotAdmissible("line bundle is not phi-admissible");
  const int d = curve.chain_len;
  const int q = curve.base.node_count();

  SemistabilizationResult result{
      TwisterZ{std::vector<std::vector<Integer>>(q, std::vector<Integer>(d, 0))}, curve, {}};
  auto& degs = result.curve;
  std::vector<std::optional<ChainWindow>> previous(q);

  for (int step = 0;; ++step) {
    std::vector<std::optional<ChainWindow>> windows(q);
    bool any = false;
    for (int n = 0; n < q; ++n) {
      windows[n] = maximal_degree_one_subchain(degs.chain_degs[n]);
      if (!windows[n]) continue;
      any = true;
      if (step > 0 && !(previous[n] && windows[n]->strictly_inside(*previous[n]))) {
        throw std::logic_error("semistabilization windows are not strictly nested");
      }
    }
    if (!any) break;
    if (step >= d) throw std::logic_error("semistabilization exceeded chain length");

    // Twisting by W: each component of W changes by (neighbours in W) - 2,
    // each outside neighbour of W (possibly a base component) gains 1.
    for (int n = 0; n < q; ++n) {
      if (!windows[n]) continue;
      const auto [first, last] = *windows[n];
      auto& chain = degs.chain_degs[n];
      for (int k = first; k <= last; ++k) {
        const int inside = (k > first ? 1 : 0) + (k < last ? 1 : 0);
        chain[k] += inside - 2;
        result.twister.multiplicity[n][k] += 1;
      }
      const auto [r, s] = curve.base.node(n);
      if (first > 0) chain[first - 1] += 1; else degs.base_degs[r] += 1;
      if (last < d - 1) chain[last + 1] += 1; else degs.base_degs[s] += 1;
    }
    result.windows.push_back(windows);
    previous = windows;
  }
  return result;
}

PushforwardCheck check_pushforward(const ChainMarkedCurve& curve, const Polarization& pol) {
  PushforwardCheck check;
  check.admissible = is_admissible(curve);
  if (!check.admissible) return check;

  const DualGraph graph = expanded_graph(curve);
  const Multidegree md = expanded_multidegree(curve);
  const Polarization pol_d = induced_polarization(pol, curve.base, curve.chain_len);
  if (md.total() != pol_d.total()) {
    throw DegreeMismatch("line bundle degree differs from polarization degree");
  }
  const std::uint64_t base_mask = (1ULL << curve.base.components()) - 1;
  const auto subcurves = admissible_subcurves(graph);
  for (const auto& y : subcurves) {
    const Subcurve yc = y.complement(graph.components());
    const bool contracted = (y.members & base_mask) == 0 || (yc.members & base_mask) == 0;
    if (contracted) continue;
    if (!quasistable_over(graph, pol_d, md, y)) {
      check.witness = y;
      return check;
    }
  }
  check.hypotheses = true;

  const auto twisted = semistabilize(curve);
  if (!is_quasistable(graph, pol_d, expanded_multidegree(twisted.curve), subcurves)) {
    throw std::logic_error("semistabilized line bundle is not quasistable on C(d)");
  }
  return check;
}

}  // namespace abelmap
