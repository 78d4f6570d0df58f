#pragma once

#include <compare>
#include <string>
#include <vector>

namespace omeganorm {

// A bijection on {0..degree-1} stored as its image array: images()[i] is
// where point i goes.
//
// Composition order is fixed project-wide as "apply left, then right":
// compose(a, b) maps i to b(a(i)). Conjugation follows the same convention,
// conjugate(h, g) = g^-1 h g, i.e. apply g^-1, then h, then g.
class Perm {
 public:
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  // Cycles use 0-indexed points; points not mentioned are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  // Least k >= 1 with p^k = id; equals the lcm of the cycle lengths.
  int order() const;

  // Nontrivial cycles, each starting at its smallest point, sorted by
  // starting point.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

// Apply a, then b.
Perm compose(const Perm& a, const Perm& b);

// g^-1 h g under the fixed composition order.
Perm conjugate(const Perm& h, const Perm& g);

}  // namespace omeganorm
