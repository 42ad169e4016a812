#include "abelmap/local_blowup.hpp"

#include <bit>
#include <string>

#include "abelmap/errors.hpp"

namespace abelmap {

IndexSet IndexSet::of(std::initializer_list<int> elements) {
  IndexSet s;
  for (int e : elements) s.insert(e);
  return s;
}

int IndexSet::size() const { return std::popcount(bits); }

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

void SubsetCollection::validate() const {
  if (n < 1 || n > 63) throw InvalidInput("index set size must lie in [1, 63]");
  const IndexSet all = IndexSet::full(n);
  for (const auto& s : sets) {
    if ((s.bits & ~all.bits) != 0) throw InvalidInput("collection set has elements outside F");
    if (s.empty() || s == all) throw InvalidInput("collection sets must be nonempty and proper");
  }
}

SubsetCollection SubsetCollection::dropping_trivial(int n, const std::vector<IndexSet>& sets) {
  SubsetCollection col{n, {}};
  const IndexSet all = IndexSet::full(n);
  for (const auto& s : sets) {
    const IndexSet clipped = s.intersect(all);
    if (!clipped.empty() && clipped != all) col.sets.push_back(clipped);
  }
  return col;
}

IndexSet normalize_divisor(const BlowupDivisor& divisor, int n) {
  switch (divisor.kind) {
    case BlowupDivisor::Kind::y_side:
      return divisor.set.complement(n);
    case BlowupDivisor::Kind::x_side:
    case BlowupDivisor::Kind::diagonal:
      break;
  }
  return divisor.set;
}

bool is_smooth_collection(const SubsetCollection& col) {
  for (int i = 0; i < col.n; ++i) {
    for (int j = i + 1; j < col.n; ++j) {
      bool separated = false;
      for (const auto& s : col.sets) {
        if (s.contains(i) != s.contains(j)) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool a_less(const SubsetCollection& col, int m, int n) {
  for (const auto& s : col.sets) {
    if (s.contains(m) != s.contains(n)) return s.contains(m);
  }
  return false;
}

std::vector<int> a_order(const SubsetCollection& col) {
  col.validate();
  if (!is_smooth_collection(col)) throw NotSmooth("collection does not separate every pair");
  // Rank = number of elements preceding each index; a total order makes the
  // ranks a permutation.
  std::vector<int> eta(static_cast<std::size_t>(col.n), -1);
  for (int m = 0; m < col.n; ++m) {
    int rank = 0;
    for (int other = 0; other < col.n; ++other) rank += (other != m && a_less(col, other, m)) ? 1 : 0;
    eta[rank] = m;
  }
  return eta;
}

std::vector<int> node_sigma_assignment(const SubsetCollection& col) { return a_order(col); }

NodeIncidence strict_transform_incidence(const SubsetCollection& col, int node) {
  const auto eta = a_order(col);
  if (node < 0 || node >= col.n) throw InvalidInput("node index out of range");
  NodeIncidence incidence;
  for (int k = 0; k <= node; ++k) incidence.x_side.insert(eta[k]);
  for (int k = node; k < col.n; ++k) incidence.y_side.insert(eta[k]);
  return incidence;
}

namespace {

ChartChain recurse(IndexSet domain, const std::vector<IndexSet>& sets, std::size_t from) {
  if (domain.size() == 1) return {domain.elements(), 0};
  for (std::size_t k = from; k < sets.size(); ++k) {
    const IndexSet centre = sets[k].intersect(domain);
    if (centre.empty() || centre == domain) continue;  // empty or Cartier here
    const IndexSet rest{domain.bits & ~centre.bits};
    ChartChain u = recurse(centre, sets, k + 1);
    ChartChain v = recurse(rest, sets, k + 1);
    u.order.insert(u.order.end(), v.order.begin(), v.order.end());
    u.exceptional_curves += v.exceptional_curves + 1;
    return u;
  }
  throw NotSmooth("collection does not separate the indices of a chart");
}

}  // namespace

ChartChain chart_recursion_oracle(const SubsetCollection& col) {
  col.validate();
  return recurse(IndexSet::full(col.n), col.sets, 0);
}

int localized_chain_length(const SubsetCollection& col, IndexSet inverted) {
  col.validate();
  const IndexSet remaining = inverted.complement(col.n);
  if (remaining.empty()) throw InvalidInput("localisation inverts every coordinate");
  return recurse(remaining, col.sets, 0).exceptional_curves;
}

}  // namespace abelmap
