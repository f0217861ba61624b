#include "opengames/boundary.hpp"

namespace og {

namespace {

FiniteSet product_of(const std::vector<Wire>& wires, Polarity p) {
  std::vector<FiniteSet> carriers;
  for (const Wire& w : wires) {
    if (w.polarity == p) carriers.push_back(w.carrier);
  }
  return product(carriers);
}

}  // namespace

Boundary::Boundary() : Boundary(std::vector<Wire>{}) {}

Boundary::Boundary(std::vector<Wire> wires)
    : wires_(std::move(wires)),
      forward_(product_of(wires_, Polarity::forward)),
      backward_(product_of(wires_, Polarity::backward)) {}

Boundary Boundary::covariant(const FiniteSet& x) {
  return Boundary({Wire{x, Polarity::forward}});
}

Boundary Boundary::contravariant(const FiniteSet& s) {
  return Boundary({Wire{s, Polarity::backward}});
}

Boundary Boundary::pair(const FiniteSet& x, const FiniteSet& s) {
  std::vector<Wire> wires;
  if (!x.is_unit()) wires.push_back({x, Polarity::forward});
  if (!s.is_unit()) wires.push_back({s, Polarity::backward});
  return Boundary(std::move(wires));
}

std::string Boundary::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < wires_.size(); ++i) {
    if (i > 0) out += ", ";
    out += wires_[i].carrier.name();
    out += wires_[i].polarity == Polarity::forward ? "+" : "-";
  }
  return out + "]";
}

Boundary concat(const Boundary& a, const Boundary& b) {
  std::vector<Wire> wires = a.wires();
  wires.insert(wires.end(), b.wires().begin(), b.wires().end());
  return Boundary(std::move(wires));
}

bool same_type(const Boundary& a, const Boundary& b) {
  return same_elements(a.forward(), b.forward()) &&
         same_elements(a.backward(), b.backward());
}

}  // namespace og
