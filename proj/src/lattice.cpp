#include "omeganorm/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "omeganorm/errors.hpp"

namespace omeganorm {

namespace {

void require_lattice_cap(int order, const LatticeOptions& opts) {
  if (order > opts.max_lattice) {
    throw LatticeCapExceeded("subgroup lattice enumeration requested for order " +
                             std::to_string(order) + ", above the cap of " +
                             std::to_string(opts.max_lattice));
  }
}

// Join-saturation: starting from the given seeds, repeatedly extend each
// known subgroup by one outside element of the ambient until no new subgroup
// appears. Every subgroup of the ambient that contains some seed arises this
// way, since it can be built one generator at a time.
std::vector<Subgroup> saturate_joins(const Subgroup& ambient,
                                     std::vector<std::vector<int>> seeds) {
  const FiniteGroup& g = ambient.group();
  // members -> generating set used to reach them
  std::map<std::vector<int>, std::vector<int>> known;
  std::deque<std::vector<int>> todo;

  auto add = [&](std::vector<int> members, std::vector<int> gens) {
    auto [it, inserted] = known.emplace(std::move(members), std::move(gens));
    if (inserted) todo.push_back(it->first);
  };

  for (auto& seed : seeds) {
    Subgroup s = subgroup_closure_in(ambient, seed);
    add(s.members(), std::move(seed));
  }

  while (!todo.empty()) {
    std::vector<int> members = std::move(todo.front());
    todo.pop_front();
    const std::vector<int>& gens = known.at(members);
    for (int x : ambient.members()) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      std::vector<int> join_gens = gens;
      join_gens.push_back(x);
      Subgroup j = subgroup_closure_in(ambient, join_gens);
      add(j.members(), std::move(join_gens));
    }
  }

  std::vector<Subgroup> result;
  result.reserve(known.size());
  for (const auto& [members, gens] : known) {
    result.push_back(Subgroup::unchecked(g, members));
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return result;
}

int p_part(int n, int p) {
  int result = 1;
  while (n % p == 0) {
    n /= p;
    result *= p;
  }
  return result;
}

bool is_power_of(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const Subgroup& ambient, const LatticeOptions& opts) {
  require_lattice_cap(ambient.order(), opts);
  // Seed with the trivial subgroup and every cyclic subgroup.
  std::vector<std::vector<int>> seeds;
  seeds.push_back({});
  for (int x : ambient.members()) seeds.push_back({x});
  return saturate_joins(ambient, std::move(seeds));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const LatticeOptions& opts) {
  return all_subgroups(whole_group(g), opts);
}

std::vector<Subgroup> overgroups_within(const Subgroup& ambient, const Subgroup& h,
                                        const LatticeOptions& opts) {
  if (!ambient.contains_subgroup(h)) {
    throw InvalidArgument("interval base subgroup is not contained in the ambient");
  }
  require_lattice_cap(ambient.order(), opts);
  std::vector<std::vector<int>> seeds;
  seeds.push_back(small_generating_set(h));
  auto result = saturate_joins(ambient, std::move(seeds));
  // All results contain h by construction.
  return result;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, int p) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  const int full_p_part = p_part(g.order(), p);
  if (full_p_part == 1) {
    return {trivial_subgroup(g)};
  }

  // Find a p-element to start from (Cauchy guarantees one exists).
  int seed = -1;
  for (int i = 0; i < g.order(); ++i) {
    int ord = g.element_order(i);
    if (ord % p == 0) {
      int cofactor = ord / p_part(ord, p);
      int x = i;
      for (int k = 1; k < cofactor; ++k) x = g.mul(x, i);
      seed = x;
      break;
    }
  }

  // Grow through normalizers: while P is not full, N_G(P)/P has order
  // divisible by p, so some x in N_G(P) \ P extends P to a larger p-group.
  std::vector<int> seed_vec{seed};
  Subgroup sylow = subgroup_closure(g, seed_vec);
  Subgroup whole = whole_group(g);
  while (sylow.order() < full_p_part) {
    Subgroup n = normalizer(whole, sylow);
    bool grew = false;
    for (int x : n.members()) {
      if (sylow.contains(x)) continue;
      std::vector<int> gens = small_generating_set(sylow);
      gens.push_back(x);
      Subgroup candidate = subgroup_closure(g, gens);
      if (is_power_of(candidate.order(), p)) {
        sylow = std::move(candidate);
        grew = true;
        break;
      }
    }
    if (!grew) {
      throw Error("internal error: Sylow subgroup growth stalled");
    }
  }

  // All Sylow p-subgroups are conjugate.
  std::map<std::vector<int>, bool> seen;
  for (int x : whole.members()) {
    seen.emplace(conjugate_subgroup(sylow, x).members(), true);
  }
  std::vector<Subgroup> result;
  result.reserve(seen.size());
  for (const auto& [members, _] : seen) {
    result.push_back(Subgroup::unchecked(g, members));
  }
  return result;
}

std::vector<Subgroup> maximal_abelian_subgroups(const FiniteGroup& g,
                                                const LatticeOptions& opts) {
  std::vector<Subgroup> abelian;
  for (const Subgroup& h : all_subgroups(g, opts)) {
    if (is_abelian(h)) abelian.push_back(h);
  }
  std::vector<Subgroup> result;
  for (const Subgroup& a : abelian) {
    bool maximal = true;
    for (const Subgroup& b : abelian) {
      if (a.order() < b.order() && b.contains_subgroup(a)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.push_back(a);
  }
  return result;
}

bool is_t_group(const FiniteGroup& g, const LatticeOptions& opts) {
  Subgroup whole = whole_group(g);
  for (const Subgroup& h : all_subgroups(g, opts)) {
    if (is_subnormal(whole, h) && !is_normal_in(whole, h)) return false;
  }
  return true;
}

}  // namespace omeganorm
