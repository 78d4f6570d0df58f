#pragma once

#include <vector>

#include "omeganorm/subgroup.hpp"

namespace omeganorm {

// Ascending central series Z0 = 1 <= Z1 = Z(G) <= ... up to its fixed point,
// the hypercenter. Terms are strictly ascending; `stabilized` records that
// the next step reproduced the final term.
struct CentralSeries {
  std::vector<Subgroup> terms;
  bool stabilized = true;

  const Subgroup& hypercenter() const { return terms.back(); }
  // Z_k with the series read as constant past its fixed point.
  const Subgroup& term(int k) const {
    return terms[static_cast<std::size_t>(k) < terms.size() ? k : terms.size() - 1];
  }
};

CentralSeries upper_central_series(const Subgroup& ambient);
CentralSeries upper_central_series(const FiniteGroup& g);

Subgroup hypercenter(const Subgroup& ambient);
Subgroup hypercenter(const FiniteGroup& g);

bool is_nilpotent(const FiniteGroup& g);

// [H, H]: normal closure in H of the commutators of a generating set.
Subgroup derived_subgroup(const Subgroup& ambient);

// G >= [G,G] >= ... ; the first derived term is always recorded, then the
// series continues while strictly descending.
std::vector<Subgroup> derived_series(const Subgroup& ambient);
std::vector<Subgroup> derived_series(const FiniteGroup& g);

bool is_solvable(const Subgroup& ambient);
bool is_solvable(const FiniteGroup& g);

}  // namespace omeganorm
