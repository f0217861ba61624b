#include "opengames/fn_table.hpp"

#include "opengames/errors.hpp"
#include "opengames/size_guard.hpp"

namespace og {

FnTable::FnTable(FiniteSet domain, FiniteSet codomain,
                 std::vector<std::size_t> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw TypeMismatch("function table over " + domain_.name() + " has " +
                       std::to_string(images_.size()) + " entries, expected " +
                       std::to_string(domain_.size()));
  }
  for (std::size_t y : images_) {
    if (y >= codomain_.size()) {
      throw TypeMismatch("function table image outside " + codomain_.name());
    }
  }
}

FnTable FnTable::from_indices(
    FiniteSet domain, FiniteSet codomain,
    const std::function<std::size_t(std::size_t)>& f) {
  check_size(domain.size(), "table over " + domain.name());
  std::vector<std::size_t> images(domain.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = f(x);
  return FnTable(std::move(domain), std::move(codomain), std::move(images));
}

FnTable FnTable::from_values(FiniteSet domain, FiniteSet codomain,
                             const std::function<Value(const Value&)>& f) {
  const FiniteSet cod = codomain;
  const FiniteSet dom = domain;
  return from_indices(std::move(domain), std::move(codomain),
                      [&](std::size_t x) {
                        return cod.index_of(f(dom.element(x)));
                      });
}

Value FnTable::apply(const Value& x) const {
  return codomain_.element(images_[domain_.index_of(x)]);
}

std::string FnTable::to_string() const {
  std::string out = "{";
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x > 0) out += ", ";
    out += domain_.element(x).to_string() + " -> " +
           codomain_.element(images_[x]).to_string();
  }
  return out + "}";
}

bool operator==(const FnTable& a, const FnTable& b) {
  return same_elements(a.domain_, b.domain_) &&
         same_elements(a.codomain_, b.codomain_) && a.images_ == b.images_;
}

SubsetTable::SubsetTable(FiniteSet carrier, std::vector<char> members)
    : carrier_(std::move(carrier)), members_(std::move(members)) {
  if (members_.size() != carrier_.size()) {
    throw TypeMismatch("subset mask does not match carrier " +
                       carrier_.name());
  }
}

SubsetTable SubsetTable::none(FiniteSet carrier) {
  std::vector<char> mask(carrier.size(), 0);
  return SubsetTable(std::move(carrier), std::move(mask));
}

SubsetTable SubsetTable::all(FiniteSet carrier) {
  std::vector<char> mask(carrier.size(), 1);
  return SubsetTable(std::move(carrier), std::move(mask));
}

std::size_t SubsetTable::count() const {
  std::size_t n = 0;
  for (char c : members_) n += c != 0;
  return n;
}

std::vector<std::size_t> SubsetTable::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

std::vector<Value> SubsetTable::values() const {
  std::vector<Value> out;
  for (std::size_t i : indices()) out.push_back(carrier_.element(i));
  return out;
}

std::string SubsetTable::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const Value& v : values()) {
    if (!first) out += ", ";
    first = false;
    out += v.to_string();
  }
  return out + "}";
}

bool operator==(const SubsetTable& a, const SubsetTable& b) {
  return same_elements(a.carrier_, b.carrier_) && a.members_ == b.members_;
}

FnTable identity_fn(const FiniteSet& a) {
  return FnTable::from_indices(a, a, [](std::size_t x) { return x; });
}

FnTable compose_fn(const FnTable& f, const FnTable& g) {
  if (!same_elements(f.codomain(), g.domain())) {
    throw TypeMismatch("cannot compose " + f.domain().name() + " -> " +
                       f.codomain().name() + " with " + g.domain().name() +
                       " -> " + g.codomain().name());
  }
  return FnTable::from_indices(f.domain(), g.codomain(),
                               [&](std::size_t x) { return g(f(x)); });
}

FnTable pair_fn(const FnTable& f, const FnTable& g) {
  if (!same_elements(f.domain(), g.domain())) {
    throw TypeMismatch("cannot pair functions with domains " +
                       f.domain().name() + " and " + g.domain().name());
  }
  const std::size_t width = g.codomain().size();
  return FnTable::from_indices(
      f.domain(), product(f.codomain(), g.codomain()),
      [&](std::size_t x) { return f(x) * width + g(x); });
}

FnTable projection(const FiniteSet& a, const FiniteSet& b, int which) {
  const std::size_t width = b.size();
  if (which == 0) {
    return FnTable::from_indices(product(a, b), a, [&](std::size_t p) {
      return p / width;
    });
  }
  return FnTable::from_indices(product(a, b), b,
                               [&](std::size_t p) { return p % width; });
}

FnTable diagonal(const FiniteSet& a) {
  const std::size_t width = a.size();
  return FnTable::from_indices(a, product(a, a), [&](std::size_t x) {
    return x * width + x;
  });
}

FnTable terminal(const FiniteSet& a) {
  return FnTable::from_indices(a, FiniteSet::unit(),
                               [](std::size_t) { return std::size_t{0}; });
}

std::size_t function_count(const FiniteSet& a, const FiniteSet& b) {
  return saturating_pow(b.size(), a.size());
}

FnTable function_at(const FiniteSet& a, const FiniteSet& b, std::size_t i) {
  const std::vector<std::size_t> radices(a.size(), b.size());
  return FnTable(a, b, mixed_radix_digits(i, radices));
}

std::size_t function_index(const FnTable& f) {
  const std::vector<std::size_t> radices(f.domain().size(),
                                         f.codomain().size());
  return mixed_radix_index(f.images(), radices);
}

void for_each_function(const FiniteSet& a, const FiniteSet& b,
                       const std::function<void(const FnTable&)>& visit) {
  const std::size_t n = function_count(a, b);
  check_size(n, "functions " + a.name() + " -> " + b.name());
  for (std::size_t i = 0; i < n; ++i) visit(function_at(a, b, i));
}

std::vector<FnTable> enumerate_functions(const FiniteSet& a,
                                         const FiniteSet& b) {
  std::vector<FnTable> out;
  for_each_function(a, b, [&](const FnTable& f) { out.push_back(f); });
  return out;
}

}  // namespace og
