#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "omeganorm/perm.hpp"

namespace omeganorm {

inline constexpr int kDefaultMaxOrder = 20000;

// A finite permutation group given by a fully enumerated element set.
//
// Elements are stored sorted lexicographically by image array, which makes
// the ordering canonical and stable; the identity is always at index 0.
// Instances are immutable after construction and cheap to copy (shared
// handle). Element-index arithmetic (mul/inv/conj) is the workhorse for all
// higher layers; a multiplication table is memoised for small groups.
class FiniteGroup {
 public:
  const std::string& name() const { return data_->name; }
  int degree() const { return data_->degree; }
  int order() const { return static_cast<int>(data_->elements.size()); }
  const std::vector<Perm>& elements() const { return data_->elements; }
  const std::vector<Perm>& generators() const { return data_->generators; }
  std::vector<int> generator_indices() const;

  const Perm& element(int index) const { return data_->elements[index]; }
  int identity_index() const { return 0; }

  std::optional<int> find(const Perm& p) const;
  int index_of(const Perm& p) const;  // throws InvalidArgument if absent

  int mul(int a, int b) const;        // index of elements[a] followed by elements[b]
  int inv(int a) const;
  int conj(int h, int g) const { return mul(mul(inv(g), h), g); }
  int commutator(int x, int g) const { return mul(mul(mul(inv(x), inv(g)), x), g); }
  int element_order(int a) const { return data_->elements[a].order(); }

  // True when both handles share the same underlying element set.
  bool same_group_as(const FiniteGroup& other) const { return data_ == other.data_; }

  friend FiniteGroup group_from_generators(std::string name, int degree,
                                           std::vector<Perm> generators, int max_order);

 private:
  struct Data {
    std::string name;
    int degree = 1;
    std::vector<Perm> generators;
    std::vector<Perm> elements;  // sorted
    std::vector<int> inverse_table;
    mutable std::once_flag mul_table_once;
    mutable std::vector<int> mul_table;  // order*order entries when built
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Enumerates <generators> by breadth-first closure. Throws OrderCapExceeded
// if the closure grows past max_order elements.
FiniteGroup group_from_generators(std::string name, int degree,
                                  std::vector<Perm> generators,
                                  int max_order = kDefaultMaxOrder);

}  // namespace omeganorm
