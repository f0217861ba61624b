#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opengames/value.hpp"

namespace og {

/// A named finite carrier with a stable element order.
///
/// Three shapes are supported: an explicit list of elements, an n-ary
/// product (tuples in lexicographic order, first component most significant)
/// and a function space (functions listed lexicographically by their image
/// tuples). Elements of the structured shapes are computed on demand, so
/// indices can be manipulated arithmetically without materializing the set.
/// Values are immutable and cheap to copy.
class FiniteSet {
 public:
  enum class Kind { explicit_list, product, function_space };

  /// Empty set named "0".
  FiniteSet();

  /// Throws og::Error if two elements coincide.
  static FiniteSet of(std::string name, std::vector<Value> elements);
  static FiniteSet of_labels(std::string name,
                             const std::vector<std::string>& labels);
  /// {0, 1, ..., n-1} as atom labels.
  static FiniteSet range(std::string name, std::size_t n);
  /// The canonical singleton 1 = {*}.
  static FiniteSet unit();

  const std::string& name() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  Kind kind() const;
  bool is_unit() const;

  /// Product factors, or {domain, codomain} for a function space.
  const std::vector<FiniteSet>& factors() const;

  Value element(std::size_t index) const;
  std::vector<Value> elements() const;
  std::optional<std::size_t> find(const Value& v) const;
  /// Throws og::TypeMismatch if `v` is not a member.
  std::size_t index_of(const Value& v) const;

  std::string to_string() const;

  /// Same name and same element list.
  friend bool operator==(const FiniteSet& a, const FiniteSet& b);

 private:
  struct Rep;
  explicit FiniteSet(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;

  friend FiniteSet product(std::span<const FiniteSet> factors);
  friend FiniteSet function_space(const FiniteSet& domain,
                                  const FiniteSet& codomain);
  friend bool same_elements(const FiniteSet& a, const FiniteSet& b);
};

/// Same element list, names ignored.
bool same_elements(const FiniteSet& a, const FiniteSet& b);

/// Binary product; always a set of pairs.
FiniteSet product(const FiniteSet& a, const FiniteSet& b);
/// n-ary product: the unit set for no factors, the factor itself for one.
FiniteSet product(std::span<const FiniteSet> factors);
/// Set of all total functions domain -> codomain; guarded by the size cap.
FiniteSet function_space(const FiniteSet& domain, const FiniteSet& codomain);

/// Index of the tuple (indices[0], ..., indices[n-1]) in the product of sets
/// with the given sizes.
std::size_t mixed_radix_index(std::span<const std::size_t> indices,
                              std::span<const std::size_t> radices);
std::vector<std::size_t> mixed_radix_digits(std::size_t index,
                                            std::span<const std::size_t> radices);

}  // namespace og
