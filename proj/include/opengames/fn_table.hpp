#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "opengames/finite_set.hpp"

namespace og {

/// A total function between finite sets, stored extensionally as the index of
/// the image of each domain element. Equality is pointwise.
class FnTable {
 public:
  FnTable() = default;
  /// Throws og::TypeMismatch unless `images` has one valid codomain index per
  /// domain element.
  FnTable(FiniteSet domain, FiniteSet codomain, std::vector<std::size_t> images);

  static FnTable from_indices(FiniteSet domain, FiniteSet codomain,
                              const std::function<std::size_t(std::size_t)>& f);
  static FnTable from_values(FiniteSet domain, FiniteSet codomain,
                             const std::function<Value(const Value&)>& f);

  const FiniteSet& domain() const { return domain_; }
  const FiniteSet& codomain() const { return codomain_; }
  std::span<const std::size_t> images() const { return images_; }

  std::size_t operator()(std::size_t x) const { return images_[x]; }
  Value apply(const Value& x) const;

  /// `{0 -> 1, 1 -> 0}`.
  std::string to_string() const;

  friend bool operator==(const FnTable& a, const FnTable& b);

 private:
  FiniteSet domain_;
  FiniteSet codomain_;
  std::vector<std::size_t> images_;
};

/// A subset of a finite carrier.
class SubsetTable {
 public:
  SubsetTable() = default;
  SubsetTable(FiniteSet carrier, std::vector<char> members);
  static SubsetTable none(FiniteSet carrier);
  static SubsetTable all(FiniteSet carrier);

  const FiniteSet& carrier() const { return carrier_; }
  bool contains(std::size_t i) const { return members_[i] != 0; }
  void insert(std::size_t i) { members_[i] = 1; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> indices() const;
  std::vector<Value> values() const;
  std::span<const char> mask() const { return members_; }

  std::string to_string() const;

  friend bool operator==(const SubsetTable& a, const SubsetTable& b);

 private:
  FiniteSet carrier_;
  std::vector<char> members_;
};

FnTable identity_fn(const FiniteSet& a);
/// `f` then `g`, i.e. g . f.
FnTable compose_fn(const FnTable& f, const FnTable& g);
/// x |-> (f(x), g(x)).
FnTable pair_fn(const FnTable& f, const FnTable& g);
/// a*b -> a (which = 0) or a*b -> b (which = 1).
FnTable projection(const FiniteSet& a, const FiniteSet& b, int which);
/// x |-> (x, x).
FnTable diagonal(const FiniteSet& a);
/// The unique map into 1.
FnTable terminal(const FiniteSet& a);

/// Number of functions a -> b, saturating.
std::size_t function_count(const FiniteSet& a, const FiniteSet& b);
/// The i-th function a -> b in enumeration order.
FnTable function_at(const FiniteSet& a, const FiniteSet& b, std::size_t i);
/// Position of `f` in enumeration order.
std::size_t function_index(const FnTable& f);
/// Every function a -> b exactly once, lexicographically by image tuple.
/// Guarded by the size cap.
std::vector<FnTable> enumerate_functions(const FiniteSet& a,
                                         const FiniteSet& b);
void for_each_function(const FiniteSet& a, const FiniteSet& b,
                       const std::function<void(const FnTable&)>& visit);

}  // namespace og
