#pragma once

#include <vector>

#include "omeganorm/subgroup.hpp"

namespace omeganorm {

inline constexpr int kDefaultMaxLattice = 400;

struct LatticeOptions {
  // Full lattice enumeration is refused for ambients above this order.
  int max_lattice = kDefaultMaxLattice;
};

// The complete subgroup lattice of the ambient, deduplicated, sorted by
// (order, member list). Throws LatticeCapExceeded above the cap.
std::vector<Subgroup> all_subgroups(const Subgroup& ambient, const LatticeOptions& opts = {});
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const LatticeOptions& opts = {});

// All K with h <= K <= ambient (the interval sublattice). Requires h <= ambient.
std::vector<Subgroup> overgroups_within(const Subgroup& ambient, const Subgroup& h,
                                        const LatticeOptions& opts = {});

std::vector<int> prime_divisors(int n);
bool is_prime(int n);

// All Sylow p-subgroups. For p not dividing |G| the trivial subgroup is
// returned as the unique Sylow p-subgroup. Throws InvalidArgument if p is
// not prime.
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, int p);

// Abelian subgroups maximal under inclusion among the abelian subgroups.
std::vector<Subgroup> maximal_abelian_subgroups(const FiniteGroup& g,
                                                const LatticeOptions& opts = {});

// Every subnormal subgroup is normal.
bool is_t_group(const FiniteGroup& g, const LatticeOptions& opts = {});

}  // namespace omeganorm
