#include "groupmix/structure.hpp"

#include <stdexcept>

namespace groupmix {

namespace {

bool order_is_2power(std::int64_t k) { return k >= 1 && (k & (k - 1)) == 0; }

}  // namespace

std::vector<Elem> two_element_closure(const Group& g, std::int64_t bound) {
  std::vector<Elem> gens;
  for (const auto& e : g.enumerate(bound)) {
    std::int64_t k = element_order(g, e);
    if (k > 1 && order_is_2power(k)) gens.push_back(e);
  }
  auto u = subgroup_closure(g, gens, bound);
  if ((g.order() / static_cast<std::int64_t>(u.size())) % 2 == 0)
    throw std::logic_error("U(G) has even index");  // cannot happen
  return u;
}

bool is_2prime_simple(const Group& g, std::int64_t bound) {
  return static_cast<std::int64_t>(two_element_closure(g, bound).size()) == g.order();
}

bool is_involution_generated(const Group& g, std::int64_t bound) {
  std::vector<Elem> gens;
  for (const auto& e : g.enumerate(bound))
    if (element_order(g, e) == 2) gens.push_back(e);
  return static_cast<std::int64_t>(subgroup_closure(g, gens, bound).size()) == g.order();
}

std::optional<Quotient> odd_quotient_witness(const Group& g, std::int64_t bound) {
  auto u = two_element_closure(g, bound);
  if (static_cast<std::int64_t>(u.size()) == g.order()) return std::nullopt;
  return quotient_group(g, u, bound);
}

InvolutionSeries involution_series(const Group& g, std::int64_t bound) {
  InvolutionSeries series;

  // I_0 = 1; repeatedly lift the involution-generated subgroup of G/I_j.
  std::vector<Elem> current = {g.identity()};
  series.subgroups.push_back(current);
  series.orders.push_back(1);

  while (true) {
    auto quot = quotient_group(g, current, bound);
    const Group& q = *quot.group;
    std::vector<Elem> invs;
    for (const auto& e : q.enumerate(bound))
      if (element_order(q, e) == 2) invs.push_back(e);
    if (invs.empty()) break;
    auto j = subgroup_closure(q, invs, bound);
    ElemSet jset(j.begin(), j.end());
    // preimage of J in G
    std::vector<Elem> next;
    for (const auto& [elem, coset] : quot.projection)
      if (jset.count(CayleyGroup::make(coset))) next.push_back(elem);
    std::sort(next.begin(), next.end());
    series.subgroups.push_back(next);
    series.orders.push_back(static_cast<std::int64_t>(next.size()));
    current = std::move(next);
  }

  series.top_quotient_order = g.order() / series.orders.back();
  if (series.top_quotient_order % 2 == 0)
    throw std::logic_error("involution series stopped with an even top quotient");
  return series;
}

StructureReport analyze_structure(const Group& g, std::int64_t bound) {
  StructureReport rep;
  rep.order = g.order();
  auto u = two_element_closure(g, bound);
  rep.u_order = static_cast<std::int64_t>(u.size());
  rep.odd_quotient_order = rep.order / rep.u_order;
  rep.two_prime_simple = rep.u_order == rep.order;
  rep.involution_generated = is_involution_generated(g, bound);
  auto series = involution_series(g, bound);
  rep.series_orders = series.orders;
  rep.series_top_quotient = series.top_quotient_order;
  return rep;
}

}  // namespace groupmix
