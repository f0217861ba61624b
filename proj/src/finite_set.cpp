#include "opengames/finite_set.hpp"

#include <map>

#include "opengames/errors.hpp"
#include "opengames/size_guard.hpp"

namespace og {

struct FiniteSet::Rep {
  Kind kind = Kind::explicit_list;
  std::string name;
  std::size_t size = 0;
  bool unit = false;
  std::vector<Value> elements;
  std::map<Value, std::size_t> index;
  std::vector<FiniteSet> factors;
};

namespace {

bool needs_parens(const FiniteSet& s) {
  return s.kind() != FiniteSet::Kind::explicit_list;
}

std::string factor_name(const FiniteSet& s) {
  return needs_parens(s) ? "(" + s.name() + ")" : s.name();
}

std::vector<std::size_t> sizes_of(const std::vector<FiniteSet>& sets) {
  std::vector<std::size_t> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

}  // namespace

FiniteSet::FiniteSet() : FiniteSet(of("0", {})) {}

FiniteSet::FiniteSet(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

FiniteSet FiniteSet::of(std::string name, std::vector<Value> elements) {
  auto rep = std::make_shared<Rep>();
  rep->name = std::move(name);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!rep->index.emplace(elements[i], i).second) {
      throw Error("duplicate element " + elements[i].to_string() + " in set " +
                  rep->name);
    }
  }
  rep->size = elements.size();
  rep->elements = std::move(elements);
  return FiniteSet(std::move(rep));
}

FiniteSet FiniteSet::of_labels(std::string name,
                               const std::vector<std::string>& labels) {
  std::vector<Value> elements;
  elements.reserve(labels.size());
  for (const auto& l : labels) elements.push_back(Value::atom(l));
  return of(std::move(name), std::move(elements));
}

FiniteSet FiniteSet::range(std::string name, std::size_t n) {
  std::vector<Value> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(Value::atom(std::to_string(i)));
  }
  return of(std::move(name), std::move(elements));
}

FiniteSet FiniteSet::unit() {
  static const FiniteSet one = [] {
    auto rep = std::make_shared<Rep>();
    rep->name = "1";
    rep->unit = true;
    rep->elements = {Value::atom(kStar)};
    rep->index.emplace(rep->elements.front(), 0);
    rep->size = 1;
    return FiniteSet(std::move(rep));
  }();
  return one;
}

const std::string& FiniteSet::name() const { return rep_->name; }
std::size_t FiniteSet::size() const { return rep_->size; }
FiniteSet::Kind FiniteSet::kind() const { return rep_->kind; }
bool FiniteSet::is_unit() const { return rep_->unit; }
const std::vector<FiniteSet>& FiniteSet::factors() const {
  return rep_->factors;
}

Value FiniteSet::element(std::size_t index) const {
  if (index >= rep_->size) {
    throw TypeMismatch("index " + std::to_string(index) +
                       " out of range for set " + rep_->name);
  }
  switch (rep_->kind) {
    case Kind::explicit_list:
      return rep_->elements[index];
    case Kind::product: {
      const auto radices = sizes_of(rep_->factors);
      const auto digits = mixed_radix_digits(index, radices);
      std::vector<Value> items;
      items.reserve(digits.size());
      for (std::size_t i = 0; i < digits.size(); ++i) {
        items.push_back(rep_->factors[i].element(digits[i]));
      }
      return Value::tuple(std::move(items));
    }
    case Kind::function_space: {
      const FiniteSet& dom = rep_->factors[0];
      const FiniteSet& cod = rep_->factors[1];
      const std::vector<std::size_t> radices(dom.size(), cod.size());
      const auto digits = mixed_radix_digits(index, radices);
      std::vector<Value> items;
      items.reserve(digits.size());
      for (std::size_t d : digits) items.push_back(cod.element(d));
      return Value::tuple(std::move(items));
    }
  }
  return {};
}

std::vector<Value> FiniteSet::elements() const {
  std::vector<Value> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

std::optional<std::size_t> FiniteSet::find(const Value& v) const {
  switch (rep_->kind) {
    case Kind::explicit_list: {
      auto it = rep_->index.find(v);
      if (it == rep_->index.end()) return std::nullopt;
      return it->second;
    }
    case Kind::product: {
      if (!v.is_tuple() || v.items().size() != rep_->factors.size()) {
        return std::nullopt;
      }
      std::vector<std::size_t> digits;
      for (std::size_t i = 0; i < rep_->factors.size(); ++i) {
        auto d = rep_->factors[i].find(v.items()[i]);
        if (!d) return std::nullopt;
        digits.push_back(*d);
      }
      return mixed_radix_index(digits, sizes_of(rep_->factors));
    }
    case Kind::function_space: {
      const FiniteSet& dom = rep_->factors[0];
      const FiniteSet& cod = rep_->factors[1];
      if (!v.is_tuple() || v.items().size() != dom.size()) return std::nullopt;
      std::vector<std::size_t> digits;
      for (const Value& image : v.items()) {
        auto d = cod.find(image);
        if (!d) return std::nullopt;
        digits.push_back(*d);
      }
      const std::vector<std::size_t> radices(dom.size(), cod.size());
      return mixed_radix_index(digits, radices);
    }
  }
  return std::nullopt;
}

std::size_t FiniteSet::index_of(const Value& v) const {
  auto i = find(v);
  if (!i) {
    throw TypeMismatch(v.to_string() + " is not an element of " + name());
  }
  return *i;
}

std::string FiniteSet::to_string() const {
  std::string out = name() + " = {";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ", ";
    out += element(i).to_string();
  }
  return out + "}";
}

bool same_elements(const FiniteSet& a, const FiniteSet& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.size() != b.size()) return false;
  if (a.kind() == b.kind() && a.kind() != FiniteSet::Kind::explicit_list &&
      a.factors().size() == b.factors().size()) {
    bool all = true;
    for (std::size_t i = 0; i < a.factors().size() && all; ++i) {
      all = same_elements(a.factors()[i], b.factors()[i]);
    }
    if (all) return true;
  }
  if (a.kind() == FiniteSet::Kind::explicit_list &&
      b.kind() == FiniteSet::Kind::explicit_list) {
    return a.rep_->elements == b.rep_->elements;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.element(i) != b.element(i)) return false;
  }
  return true;
}

bool operator==(const FiniteSet& a, const FiniteSet& b) {
  return a.rep_ == b.rep_ || (a.name() == b.name() && same_elements(a, b));
}

FiniteSet product(const FiniteSet& a, const FiniteSet& b) {
  const FiniteSet both[] = {a, b};
  return product(std::span<const FiniteSet>(both));
}

FiniteSet product(std::span<const FiniteSet> factors) {
  if (factors.empty()) return FiniteSet::unit();
  if (factors.size() == 1) return factors.front();
  auto rep = std::make_shared<FiniteSet::Rep>();
  rep->kind = FiniteSet::Kind::product;
  rep->factors.assign(factors.begin(), factors.end());
  rep->size = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) rep->name += "*";
    rep->name += factor_name(factors[i]);
    rep->size = saturating_mul(rep->size, factors[i].size());
  }
  return FiniteSet(std::move(rep));
}

FiniteSet function_space(const FiniteSet& domain, const FiniteSet& codomain) {
  const std::size_t n = saturating_pow(codomain.size(), domain.size());
  check_size(n, "functions " + domain.name() + " -> " + codomain.name());
  auto rep = std::make_shared<FiniteSet::Rep>();
  rep->kind = FiniteSet::Kind::function_space;
  rep->factors = {domain, codomain};
  rep->name = factor_name(domain) + "->" + factor_name(codomain);
  rep->size = n;
  return FiniteSet(std::move(rep));
}

std::size_t mixed_radix_index(std::span<const std::size_t> indices,
                              std::span<const std::size_t> radices) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    index = index * radices[i] + indices[i];
  }
  return index;
}

std::vector<std::size_t> mixed_radix_digits(
    std::size_t index, std::span<const std::size_t> radices) {
  std::vector<std::size_t> digits(radices.size(), 0);
  for (std::size_t i = radices.size(); i-- > 0;) {
    if (radices[i] == 0) return digits;
    digits[i] = index % radices[i];
    index /= radices[i];
  }
  return digits;
}

}  // namespace og
