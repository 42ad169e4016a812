#include "abelmap/special_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "abelmap/errors.hpp"

namespace abelmap {

Label::Label(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != '1' && c != '2') throw InvalidInput("label letters must be 1 or 2: '" + letters_ + "'");
  }
}

Label Label::extended(int letter) const {
  Label out = *this;
  out.letters_.push_back(static_cast<char>('0' + letter));
  return out;
}

void SpecialPointData::validate(int q) const {
  const int d = degree();
  if (d < 1) throw NotConstructible("special point needs d >= 1");
  if (static_cast<int>(labels.size()) != d + 1) {
    throw NotConstructible("special point of degree " + std::to_string(d) + " needs " +
                           std::to_string(d + 1) + " labels");
  }
  for (int l : ells) {
    if (l < 0 || l >= q) throw NotConstructible("node index out of range");
  }
  for (const auto& label : labels) {
    if (label.length() != d) throw NotConstructible("label '" + label.str() + "' has wrong length");
  }
  std::set<Label> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw NotConstructible("labels are not pairwise distinct");
}

bool SpecialPointData::labels_sorted() const { return std::is_sorted(labels.begin(), labels.end()); }

SpecialPointData make_special_point(const std::vector<int>& ells_one_based,
                                    const std::vector<std::string>& words) {
  SpecialPointData point;
  for (int l : ells_one_based) point.ells.push_back(l - 1);
  for (const auto& w : words) point.labels.emplace_back(w);
  std::sort(point.labels.begin(), point.labels.end());
  return point;
}

SpecialPointData symbolic_form(const SpecialPointData& point) {
  std::map<int, int> rename;
  SpecialPointData out = point;
  for (auto& l : out.ells) {
    auto [it, inserted] = rename.try_emplace(l, static_cast<int>(rename.size()));
    l = it->second;
  }
  return out;
}

bool ell_less(const SpecialPointData& point, int node, int j1, int j2) {
  const Label& a = point.labels[j1];
  const Label& b = point.labels[j2];
  for (int k = point.degree() - 1; k >= 0; --k) {
    if (point.ells[k] == node && a.letter(k) != b.letter(k)) {
      return a.letter(k) == 2 && b.letter(k) == 1;
    }
  }
  for (int k = 0; k < point.degree(); ++k) {
    if (a.letter(k) != b.letter(k)) return a.letter(k) == 1 && b.letter(k) == 2;
  }
  return false;
}

namespace {

template <typename Less>
std::vector<int> order_by_rank(int n, Less less) {
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  for (int m = 0; m < n; ++m) {
    int rank = 0;
    for (int other = 0; other < n; ++other) {
      if (other == m) continue;
      const bool before = less(other, m);
      if (before == less(m, other)) return {};
      rank += before ? 1 : 0;
    }
    if (order[rank] != -1) return {};
    order[rank] = m;
  }
  return order;
}

}  // namespace

std::vector<int> ell_order(const SpecialPointData& point, int node) {
  const int n = static_cast<int>(point.labels.size());
  auto order = order_by_rank(n, [&](int a, int b) { return ell_less(point, node, a, b); });
  if (order.empty() && n > 0) throw OrderIncomplete("ell-ordering is not a total order");
  return order;
}

std::vector<SpecialPointData> extend_special_point(const SpecialPointData& point, int node,
                                                   const OrderingRule& rule) {
  const int d = point.degree();
  if (d < 1 || static_cast<int>(point.labels.size()) != d + 1) {
    throw NotConstructible("special point has the wrong number of labels");
  }
  point.validate(std::max(node, *std::max_element(point.ells.begin(), point.ells.end())) + 1);
  std::vector<int> order;
  try {
    order = rule(point, node);
  } catch (const OrderIncomplete& e) {
    throw NotConstructible(e.what());
  }

  std::vector<SpecialPointData> out;
  out.reserve(static_cast<std::size_t>(d + 1));
  for (int h = 0; h <= d; ++h) {
    SpecialPointData next;
    next.ells = point.ells;
    next.ells.push_back(node);
    for (int i = 0; i <= h; ++i) next.labels.push_back(point.labels[order[i]].extended(1));
    for (int i = h; i <= d; ++i) next.labels.push_back(point.labels[order[i]].extended(2));
    std::sort(next.labels.begin(), next.labels.end());
    out.push_back(std::move(next));
  }
  return out;
}

namespace {

void descend(const SpecialPointData& point, const std::vector<int>& ells, const OrderingRule& rule,
             const std::function<void(const SpecialPointData&)>& visit) {
  if (point.degree() == static_cast<int>(ells.size())) {
    visit(point);
    return;
  }
  for (const auto& child : extend_special_point(point, ells[point.degree()], rule)) {
    descend(child, ells, rule, visit);
  }
}

}  // namespace

void for_each_special_point_over(const std::vector<int>& ells, const OrderingRule& rule,
                                 const std::function<void(const SpecialPointData&)>& visit) {
  if (ells.empty()) throw InvalidInput("node tuple must be nonempty");
  SpecialPointData base{{ells[0]}, {Label("1"), Label("2")}};
  descend(base, ells, rule, visit);
}

void for_each_special_point(int d, int q, const OrderingRule& rule,
                            const std::function<void(const SpecialPointData&)>& visit) {
  if (d < 1 || q < 1) throw InvalidInput("enumeration needs d >= 1 and q >= 1");
  std::vector<int> ells(static_cast<std::size_t>(d), 0);
  while (true) {
    for_each_special_point_over(ells, rule, visit);
    int k = d - 1;
    while (k >= 0 && ells[k] == q - 1) ells[k--] = 0;
    if (k < 0) break;
    ++ells[k];
  }
}

std::vector<SpecialPointData> enumerate_special_points(int d, int q, const OrderingRule& rule) {
  std::vector<SpecialPointData> out;
  for_each_special_point(d, q, rule, [&](const SpecialPointData& p) { out.push_back(p); });
  return out;
}

std::uint64_t special_point_count(int d, int q) {
  std::uint64_t count = 1;
  for (int k = 1; k <= d; ++k) count *= static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(k);
  return count;
}

bool AVector::componentwise_le(const AVector& other) const {
  for (std::size_t l = 0; l < per_node.size(); ++l) {
    if (per_node[l] > other.per_node[l]) return false;
  }
  return true;
}

AVector a_vector(const SpecialPointData& point, int label, int q) {
  AVector a{std::vector<int>(static_cast<std::size_t>(q), 0), 0};
  for (int k = 0; k < point.degree(); ++k) {
    if (point.labels[label].letter(k) == 2) {
      ++a.per_node[point.ells[k]];
      ++a.total;
    }
  }
  return a;
}

Integer b_from_count(int a_total, Integer deg_l_c2, const Rational& e_c2, int q) {
  return ceil((Rational(a_total) - Rational(deg_l_c2) + e_c2) / Rational(q) - Rational(1, 2));
}

Integer b_value(const SpecialPointData& point, int label, Integer deg_l_c2, const Rational& e_c2,
                int q) {
  return b_from_count(a_vector(point, label, q).total, deg_l_c2, e_c2, q);
}

bool PropMainReport::item_holds(int item) const {
  return std::none_of(violations.begin(), violations.end(),
                      [&](const PropMainViolation& v) { return v.item == item; });
}

PropMainReport check_prop_main(const SpecialPointData& point, int node, int q) {
  PropMainReport report;
  const int n = static_cast<int>(point.labels.size());
  report.ordering = ell_order(point, node);
  const auto& v = report.ordering;

  const int shift = v.front();
  for (int i = 0; i < n; ++i) {
    if (v[i] != (shift + i) % n) {
      report.violations.push_back({1, 0});
      break;
    }
  }

  std::vector<AVector> a;
  for (int j = 0; j < n; ++j) a.push_back(a_vector(point, j, q));
  for (int j = 0; j + 1 < n; ++j) {
    if (!a[j].componentwise_le(a[j + 1])) report.violations.push_back({2, j});
  }
  for (int j = 0; j + 1 < n; ++j) {
    if (a[v[j]].per_node[node] < a[v[j + 1]].per_node[node]) report.violations.push_back({3, j});
  }
  const int drop = a[v.front()].per_node[node] - a[v.back()].per_node[node];
  const bool node_used = std::find(point.ells.begin(), point.ells.end(), node) != point.ells.end();
  if (drop > 1 || (drop == 1) != node_used) report.violations.push_back({4, 0});
  for (int j = 0; j + 1 < n; ++j) {
    if (a[j + 1].total - a[j].total > 1) report.violations.push_back({5, j});
  }
  return report;
}

SubsetCollection induced_collection(const SpecialPointData& point, int node,
                                    const BlowupSchedule& schedule) {
  const int d = point.degree();
  const int n = d + 1;

  // Diagonal with the k-th factor: V(x - u_{A'}, y - u_{A'^c}), equivalent to
  // blowing up V(x, u_{A'^c}). Empty when the factor sits at another node.
  std::vector<IndexSet> diagonals;
  for (int step = 0; step < d; ++step) {
    const int k = schedule.diagonals == BlowupSchedule::Diagonals::descending ? d - 1 - step : step;
    IndexSet on_first;
    if (point.ells[k] == node) {
      for (int j = 0; j < n; ++j) {
        if (point.labels[j].letter(k) == 1) on_first.insert(j);
      }
    }
    if (on_first.empty()) continue;
    diagonals.push_back(on_first.complement(n));
  }

  // [u_j] x C_1 is V(x, u_j); [u_j] x C_2 is V(y, u_j), i.e. V(x, u_{j^c}).
  std::vector<int> lex(static_cast<std::size_t>(n));
  std::iota(lex.begin(), lex.end(), 0);
  std::sort(lex.begin(), lex.end(), [&](int a, int b) { return point.labels[a] < point.labels[b]; });
  std::vector<IndexSet> components;
  if (schedule.components != BlowupSchedule::Components::none) {
    for (int j : lex) {
      components.push_back(normalize_divisor({BlowupDivisor::Kind::x_side, IndexSet::of({j})}, n));
      components.push_back(normalize_divisor({BlowupDivisor::Kind::y_side, IndexSet::of({j})}, n));
    }
    if (schedule.components == BlowupSchedule::Components::reverse) {
      std::reverse(components.begin(), components.end());
    }
  }

  std::vector<IndexSet> sets = schedule.diagonals_first ? diagonals : components;
  const auto& second = schedule.diagonals_first ? components : diagonals;
  sets.insert(sets.end(), second.begin(), second.end());
  return SubsetCollection::dropping_trivial(n, sets);
}

OrderingRule schedule_ordering(const BlowupSchedule& schedule) {
  return [schedule](const SpecialPointData& point, int node) {
    const auto col = induced_collection(point, node, schedule);
    if (!is_smooth_collection(col)) {
      throw InvalidOrder("blowup schedule induces a non-smooth collection");
    }
    return a_order(col);
  };
}

}  // namespace abelmap
