#pragma once

#include <optional>
#include <vector>

#include "groupmix/group.hpp"

namespace groupmix {

/// U(G): the subgroup generated by all elements of 2-power order, i.e. the
/// normal closure of a 2-Sylow subgroup; the minimal normal subgroup of odd
/// index.
std::vector<Elem> two_element_closure(const Group& g, std::int64_t bound = kDefaultEnumBound);

/// True iff U(G) = G (no nontrivial odd-order quotient).
bool is_2prime_simple(const Group& g, std::int64_t bound = kDefaultEnumBound);

/// True iff the elements of order 2 generate G.
bool is_involution_generated(const Group& g, std::int64_t bound = kDefaultEnumBound);

/// The non-mixability certificate: G/U(G) (odd order > 1) with its projection,
/// or nothing when G is 2'-simple.
std::optional<Quotient> odd_quotient_witness(const Group& g,
                                             std::int64_t bound = kDefaultEnumBound);

struct InvolutionSeries {
  // Ascending subgroups 1 = I_0 < I_1 < ... < I_t, as ambient element sets.
  std::vector<std::vector<Elem>> subgroups;
  std::vector<std::int64_t> orders;      // |I_j|
  std::int64_t top_quotient_order = 1;   // |G / I_t|, always odd
};

/// 1 = I_0 <| I_1 <| ... <| I_t <| G with every middle quotient generated by
/// its involutions and the top quotient of odd order.
InvolutionSeries involution_series(const Group& g, std::int64_t bound = kDefaultEnumBound);

struct StructureReport {
  std::int64_t order = 0;
  std::int64_t u_order = 0;            // |U(G)|
  std::int64_t odd_quotient_order = 1; // |G/U(G)|
  bool two_prime_simple = false;
  bool involution_generated = false;
  std::vector<std::int64_t> series_orders;
  std::int64_t series_top_quotient = 1;
};

StructureReport analyze_structure(const Group& g, std::int64_t bound = kDefaultEnumBound);

}  // namespace groupmix
