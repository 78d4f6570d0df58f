#include "omeganorm/perm.hpp"

#include <numeric>
#include <utility>

#include "omeganorm/errors.hpp"

namespace omeganorm {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw InvalidArgument("permutation degree must be at least 1");
  }
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree()) {
      throw InvalidArgument("image value " + std::to_string(v) +
                            " out of range for degree " + std::to_string(degree()));
    }
    if (seen[v]) {
      throw InvalidArgument("duplicate image value " + std::to_string(v));
    }
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 1) {
    throw InvalidArgument("permutation degree must be at least 1");
  }
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) {
    throw InvalidArgument("permutation degree must be at least 1");
  }
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (p < 0 || p >= degree) {
        throw InvalidArgument("cycle point " + std::to_string(p) +
                              " out of range for degree " + std::to_string(degree));
      }
      if (used[p]) {
        throw InvalidArgument("cycles are not disjoint at point " + std::to_string(p));
      }
      used[p] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < degree(); ++i) {
    images[images_[i]] = i;
  }
  return Perm(std::move(images));
}

int Perm::order() const {
  int result = 1;
  std::vector<char> visited(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    int point = start;
    do {
      visited[point] = 1;
      point = images_[point];
      ++length;
    } while (point != start);
    result = std::lcm(result, length);
  }
  return result;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> visited(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (visited[start] || images_[start] == start) {
      visited[start] = 1;
      continue;
    }
    std::vector<int> cycle;
    int point = start;
    do {
      visited[point] = 1;
      cycle.push_back(point);
      point = images_[point];
    } while (point != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i) {
    images[i] = b(a(i));
  }
  return Perm(std::move(images));
}

Perm conjugate(const Perm& h, const Perm& g) {
  if (h.degree() != g.degree()) {
    throw DegreeMismatch("cannot conjugate permutations of degree " +
                         std::to_string(h.degree()) + " and " + std::to_string(g.degree()));
  }
  return compose(compose(g.inverse(), h), g);
}

}  // namespace omeganorm
