#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace og {

/// An element of a finite carrier: an opaque label, or a tuple of elements.
class Value {
 public:
  Value() = default;

  static Value atom(std::string label);
  static Value tuple(std::vector<Value> items);

  bool is_atom() const { return !is_tuple_; }
  bool is_tuple() const { return is_tuple_; }
  const std::string& label() const { return label_; }
  const std::vector<Value>& items() const { return items_; }

  /// `0`, `(0, 1)`, `((a, *), b)`.
  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  std::string label_;
  std::vector<Value> items_;
  bool is_tuple_ = false;
};

std::ostream& operator<<(std::ostream& out, const Value& v);

/// Label of the unique element of the unit set.
inline const std::string kStar = "*";

/// Atoms of `v` in left-to-right order, skipping the unit element `*`.
std::vector<Value> non_unit_leaves(const Value& v);

}  // namespace og
