#include "omeganorm/series.hpp"

#include <algorithm>

namespace omeganorm {

namespace {

// Generators to test centrality against: a group's declared generators, or a
// computed small generating set for a proper subgroup.
std::vector<int> ambient_generators(const Subgroup& ambient) {
  if (ambient.is_whole_group()) {
    return ambient.group().generator_indices();
  }
  return small_generating_set(ambient);
}

}  // namespace

CentralSeries upper_central_series(const Subgroup& ambient) {
  const FiniteGroup& g = ambient.group();
  std::vector<int> gens = ambient_generators(ambient);

  CentralSeries series;
  series.terms.push_back(trivial_subgroup(g));
  while (true) {
    const Subgroup& last = series.terms.back();
    // x lies in the next term iff [x, gen] falls into the current term for
    // every generator; centrality modulo the current term may be checked on
    // generators alone.
    std::vector<int> next;
    for (int x : ambient.members()) {
      bool central = true;
      for (int gen : gens) {
        if (!last.contains(g.commutator(x, gen))) {
          central = false;
          break;
        }
      }
      if (central) next.push_back(x);
    }
    Subgroup next_term = Subgroup::unchecked(g, std::move(next));
    if (next_term == last) {
      series.stabilized = true;
      break;
    }
    series.terms.push_back(std::move(next_term));
  }
  return series;
}

CentralSeries upper_central_series(const FiniteGroup& g) {
  return upper_central_series(whole_group(g));
}

Subgroup hypercenter(const Subgroup& ambient) {
  return upper_central_series(ambient).hypercenter();
}

Subgroup hypercenter(const FiniteGroup& g) { return hypercenter(whole_group(g)); }

bool is_nilpotent(const FiniteGroup& g) {
  return hypercenter(g).order() == g.order();
}

Subgroup derived_subgroup(const Subgroup& ambient) {
  const FiniteGroup& g = ambient.group();
  std::vector<int> gens = ambient_generators(ambient);
  std::vector<int> commutators;
  for (int a : gens) {
    for (int b : gens) {
      commutators.push_back(g.commutator(a, b));
    }
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  Subgroup seed = subgroup_closure_in(ambient, commutators);
  return normal_closure(ambient, seed);
}

std::vector<Subgroup> derived_series(const Subgroup& ambient) {
  std::vector<Subgroup> terms;
  terms.push_back(ambient);
  terms.push_back(derived_subgroup(ambient));
  while (!(terms.back() == terms[terms.size() - 2])) {
    Subgroup next = derived_subgroup(terms.back());
    if (next == terms.back()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  return derived_series(whole_group(g));
}

bool is_solvable(const Subgroup& ambient) {
  return derived_series(ambient).back().is_trivial();
}

bool is_solvable(const FiniteGroup& g) { return is_solvable(whole_group(g)); }

}  // namespace omeganorm
