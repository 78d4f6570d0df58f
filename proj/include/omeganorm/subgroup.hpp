#pragma once

#include <span>
#include <vector>

#include "omeganorm/group.hpp"

namespace omeganorm {

// A subgroup of a FiniteGroup, held as the sorted list of element indices
// into the ambient group's canonical element order. Value type; equality is
// element-set equality within the same underlying group.
//
// Operations that take an "ambient" Subgroup compute relative to it (e.g.
// normalizer(M, H) = N_M(H)), so statements about subgroups of subgroups
// need no separate group construction.
class Subgroup {
 public:
  // Validates that the index set is a subgroup (contains the identity,
  // closed under multiplication).
  Subgroup(FiniteGroup group, std::vector<int> member_indices);

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int element_index) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool is_trivial() const { return order() == 1; }
  bool is_whole_group() const { return order() == group_.order(); }

  std::vector<Perm> member_perms() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_.same_group_as(b.group_) && a.members_ == b.members_;
  }

  // Internal fast path: trusts that `sorted_members` is a sorted subgroup.
  static Subgroup unchecked(FiniteGroup group, std::vector<int> sorted_members);

 private:
  struct UncheckedTag {};
  Subgroup(UncheckedTag, FiniteGroup group, std::vector<int> members);

  FiniteGroup group_;
  std::vector<int> members_;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// Smallest subgroup containing the seed elements (indices into g).
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const int> seed);
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Perm>& seed);

// Same, but validates seed within an ambient subgroup.
Subgroup subgroup_closure_in(const Subgroup& ambient, std::span<const int> seed);

// {g^-1 h g : h in H}. g is an element index of H's group.
Subgroup conjugate_subgroup(const Subgroup& h, int g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_normal_in(const Subgroup& ambient, const Subgroup& h);

// N_ambient(H) = {g in ambient : H^g = H}.
Subgroup normalizer(const Subgroup& ambient, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

// C_ambient(H) = {g in ambient : gh = hg for all h in H}.
Subgroup centralizer(const Subgroup& ambient, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);

Subgroup center(const Subgroup& ambient);
Subgroup center(const FiniteGroup& g);

// Smallest normal subgroup of the ambient containing H.
Subgroup normal_closure(const Subgroup& ambient, const Subgroup& h);
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h);

// True iff the chain K0 = ambient, K_{i+1} = normal closure of H in K_i
// terminates at H.
bool is_subnormal(const Subgroup& ambient, const Subgroup& h);
bool is_subnormal(const FiniteGroup& g, const Subgroup& h);

// Greedy generating set, deterministic; useful for reporting and for
// seeding closures cheaply.
std::vector<int> small_generating_set(const Subgroup& h);

bool is_abelian(const Subgroup& h);
bool is_abelian(const FiniteGroup& g);

}  // namespace omeganorm
