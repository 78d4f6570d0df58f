#include "omeganorm/subgroup.hpp"

#include <algorithm>
#include <deque>

#include "omeganorm/errors.hpp"

namespace omeganorm {

namespace {

void require_same_universe(const Subgroup& a, const Subgroup& b) {
  if (!a.group().same_group_as(b.group())) {
    throw InvalidArgument("subgroups belong to different groups");
  }
}

void require_contains(const Subgroup& ambient, const Subgroup& h) {
  require_same_universe(ambient, h);
  if (!ambient.contains_subgroup(h)) {
    throw InvalidArgument("subgroup is not contained in the given ambient subgroup");
  }
}

// BFS closure over element indices: all positive words in the seed.
std::vector<int> closure_indices(const FiniteGroup& g, std::span<const int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members;
  std::deque<int> todo;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      todo.push_back(x);
    }
  };
  add(g.identity_index());
  for (int s : seed) add(s);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int s : seed) add(g.mul(x, s));
  }
  std::sort(members.begin(), members.end());
  return members;
}

// H^g = H, tested as H^g being contained in H (same finite size).
bool conjugation_fixes(const Subgroup& h, int g) {
  const FiniteGroup& grp = h.group();
  for (int m : h.members()) {
    if (!h.contains(grp.conj(m, g))) return false;
  }
  return true;
}

std::vector<int> normal_closure_members(const Subgroup& ambient, std::span<const int> seed) {
  const FiniteGroup& g = ambient.group();
  // Conjugates of a generating set generate the normal closure.
  std::vector<int> conjugates;
  std::vector<char> in(g.order(), 0);
  for (int s : seed) {
    for (int a : ambient.members()) {
      int c = g.conj(s, a);
      if (!in[c]) {
        in[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return closure_indices(g, conjugates);
}

}  // namespace

Subgroup::Subgroup(FiniteGroup group, std::vector<int> member_indices)
    : group_(std::move(group)), members_(std::move(member_indices)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int m : members_) {
    if (m < 0 || m >= group_.order()) {
      throw InvalidArgument("subgroup member index " + std::to_string(m) + " out of range");
    }
  }
  if (members_.empty() || members_[0] != group_.identity_index()) {
    throw InvalidArgument("subgroup must contain the identity");
  }
  for (int a : members_) {
    for (int b : members_) {
      if (!contains(group_.mul(a, b))) {
        throw InvalidArgument("element set is not closed under the group operation");
      }
    }
  }
}

Subgroup::Subgroup(UncheckedTag, FiniteGroup group, std::vector<int> members)
    : group_(std::move(group)), members_(std::move(members)) {}

Subgroup Subgroup::unchecked(FiniteGroup group, std::vector<int> sorted_members) {
  return Subgroup(UncheckedTag{}, std::move(group), std::move(sorted_members));
}

bool Subgroup::contains(int element_index) const {
  return std::binary_search(members_.begin(), members_.end(), element_index);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                       other.members_.end());
}

std::vector<Perm> Subgroup::member_perms() const {
  std::vector<Perm> result;
  result.reserve(members_.size());
  for (int m : members_) result.push_back(group_.element(m));
  return result;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup::unchecked(g, {g.identity_index()});
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup::unchecked(g, std::move(all));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const int> seed) {
  for (int s : seed) {
    if (s < 0 || s >= g.order()) {
      throw InvalidArgument("seed element index " + std::to_string(s) +
                            " is outside the group");
    }
  }
  return Subgroup::unchecked(g, closure_indices(g, seed));
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Perm>& seed) {
  std::vector<int> indices;
  indices.reserve(seed.size());
  for (const Perm& p : seed) indices.push_back(g.index_of(p));
  return subgroup_closure(g, indices);
}

Subgroup subgroup_closure_in(const Subgroup& ambient, std::span<const int> seed) {
  for (int s : seed) {
    if (!ambient.contains(s)) {
      throw InvalidArgument("seed element index " + std::to_string(s) +
                            " is outside the ambient subgroup");
    }
  }
  return Subgroup::unchecked(ambient.group(), closure_indices(ambient.group(), seed));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const FiniteGroup& grp = h.group();
  if (g < 0 || g >= grp.order()) {
    throw InvalidArgument("conjugating element index " + std::to_string(g) +
                          " is outside the group");
  }
  std::vector<int> members;
  members.reserve(h.members().size());
  for (int m : h.members()) members.push_back(grp.conj(m, g));
  std::sort(members.begin(), members.end());
  return Subgroup::unchecked(grp, std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_universe(a, b);
  std::vector<int> members;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(members));
  return Subgroup::unchecked(a.group(), std::move(members));
}

bool is_normal_in(const Subgroup& ambient, const Subgroup& h) {
  require_contains(ambient, h);
  for (int g : ambient.members()) {
    if (!conjugation_fixes(h, g)) return false;
  }
  return true;
}

Subgroup normalizer(const Subgroup& ambient, const Subgroup& h) {
  require_contains(ambient, h);
  std::vector<int> members;
  for (int g : ambient.members()) {
    if (conjugation_fixes(h, g)) members.push_back(g);
  }
  return Subgroup::unchecked(ambient.group(), std::move(members));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  return normalizer(whole_group(g), h);
}

Subgroup centralizer(const Subgroup& ambient, const Subgroup& h) {
  require_contains(ambient, h);
  const FiniteGroup& grp = ambient.group();
  std::vector<int> members;
  for (int g : ambient.members()) {
    bool commutes = true;
    for (int m : h.members()) {
      if (grp.mul(g, m) != grp.mul(m, g)) {
        commutes = false;
        break;
      }
    }
    if (commutes) members.push_back(g);
  }
  return Subgroup::unchecked(grp, std::move(members));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  return centralizer(whole_group(g), h);
}

Subgroup center(const Subgroup& ambient) { return centralizer(ambient, ambient); }

Subgroup center(const FiniteGroup& g) {
  Subgroup whole = whole_group(g);
  return centralizer(whole, whole);
}

Subgroup normal_closure(const Subgroup& ambient, const Subgroup& h) {
  require_contains(ambient, h);
  std::vector<int> seed = small_generating_set(h);
  return Subgroup::unchecked(ambient.group(), normal_closure_members(ambient, seed));
}

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h) {
  return normal_closure(whole_group(g), h);
}

bool is_subnormal(const Subgroup& ambient, const Subgroup& h) {
  require_contains(ambient, h);
  Subgroup current = ambient;
  while (true) {
    Subgroup next = normal_closure(current, h);
    if (next == current) break;
    current = std::move(next);
  }
  return current == h;
}

bool is_subnormal(const FiniteGroup& g, const Subgroup& h) {
  return is_subnormal(whole_group(g), h);
}

std::vector<int> small_generating_set(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<int> gens;
  Subgroup current = trivial_subgroup(g);
  for (int m : h.members()) {
    if (!current.contains(m)) {
      gens.push_back(m);
      current = subgroup_closure(g, gens);
      if (current.order() == h.order()) break;
    }
  }
  return gens;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<int> gens = small_generating_set(h);
  for (int a : gens) {
    for (int b : gens) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_abelian(const FiniteGroup& g) { return is_abelian(whole_group(g)); }

}  // namespace omeganorm
