#include "omeganorm/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "omeganorm/errors.hpp"

namespace omeganorm {

namespace {

// Groups up to this order get a memoised multiplication table; larger ones
// fall back to compose-and-search.
constexpr int kMulTableMaxOrder = 2048;

}  // namespace

std::vector<int> FiniteGroup::generator_indices() const {
  std::vector<int> result;
  result.reserve(data_->generators.size());
  for (const Perm& g : data_->generators) {
    result.push_back(index_of(g));
  }
  return result;
}

std::optional<int> FiniteGroup::find(const Perm& p) const {
  const auto& elems = data_->elements;
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it != elems.end() && *it == p) {
    return static_cast<int>(it - elems.begin());
  }
  return std::nullopt;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto idx = find(p);
  if (!idx) {
    throw InvalidArgument("permutation " + p.cycle_string() + " is not an element of group '" +
                          data_->name + "'");
  }
  return *idx;
}

int FiniteGroup::mul(int a, int b) const {
  const Data& d = *data_;
  const int n = order();
  if (n <= kMulTableMaxOrder) {
    std::call_once(d.mul_table_once, [&] {
      std::vector<int> table(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          table[static_cast<std::size_t>(i) * n + j] = index_of(compose(d.elements[i], d.elements[j]));
        }
      }
      d.mul_table = std::move(table);
    });
    return d.mul_table[static_cast<std::size_t>(a) * n + b];
  }
  return index_of(compose(d.elements[a], d.elements[b]));
}

int FiniteGroup::inv(int a) const { return data_->inverse_table[a]; }

FiniteGroup group_from_generators(std::string name, int degree,
                                  std::vector<Perm> generators, int max_order) {
  if (degree < 1) {
    throw InvalidArgument("group degree must be at least 1");
  }
  if (max_order < 1) {
    throw InvalidArgument("max_order must be at least 1");
  }
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));
    }
  }

  std::set<Perm> elements;
  std::deque<Perm> todo;
  Perm id = Perm::identity(degree);
  elements.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm current = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : generators) {
      Perm next = compose(current, g);
      if (elements.insert(next).second) {
        if (static_cast<int>(elements.size()) > max_order) {
          throw OrderCapExceeded("closure of '" + name + "' exceeded the order cap of " +
                                 std::to_string(max_order) + " elements");
        }
        todo.push_back(std::move(next));
      }
    }
  }

  auto data = std::make_shared<FiniteGroup::Data>();
  data->name = std::move(name);
  data->degree = degree;
  data->generators = std::move(generators);
  data->elements.assign(elements.begin(), elements.end());

  data->inverse_table.resize(data->elements.size());
  for (std::size_t i = 0; i < data->elements.size(); ++i) {
    Perm inv = data->elements[i].inverse();
    auto it = std::lower_bound(data->elements.begin(), data->elements.end(), inv);
    data->inverse_table[i] = static_cast<int>(it - data->elements.begin());
  }

  return FiniteGroup(std::move(data));
}

}  // namespace omeganorm
