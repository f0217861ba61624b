#include "opengames/value.hpp"

#include <ostream>

namespace og {

Value Value::atom(std::string label) {
  Value v;
  v.label_ = std::move(label);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.items_ = std::move(items);
  v.is_tuple_ = true;
  return v;
}

std::string Value::to_string() const {
  if (!is_tuple_) return label_;
  std::string out = "(";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i > 0) out += ", ";
    out += items_[i].to_string();
  }
  out += ")";
  return out;
}

bool operator==(const Value& a, const Value& b) {
  return a.is_tuple_ == b.is_tuple_ && a.label_ == b.label_ &&
         a.items_ == b.items_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.is_tuple_ != b.is_tuple_) return a.is_tuple_ <=> b.is_tuple_;
  if (!a.is_tuple_) return a.label_.compare(b.label_) <=> 0;
  const std::size_t n = std::min(a.items_.size(), b.items_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.items_[i] <=> b.items_[i]; c != 0) return c;
  }
  return a.items_.size() <=> b.items_.size();
}

std::ostream& operator<<(std::ostream& out, const Value& v) {
  return out << v.to_string();
}

namespace {
void collect_leaves(const Value& v, std::vector<Value>& out) {
  if (v.is_atom()) {
    if (v.label() != kStar) out.push_back(v);
    return;
  }
  for (const Value& item : v.items()) collect_leaves(item, out);
}
}  // namespace

std::vector<Value> non_unit_leaves(const Value& v) {
  std::vector<Value> out;
  collect_leaves(v, out);
  return out;
}

}  // namespace og
