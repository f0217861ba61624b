#pragma once

#include <string>
#include <vector>

#include "opengames/finite_set.hpp"

namespace og {

enum class Polarity { forward, backward };

struct Wire {
  FiniteSet carrier;
  Polarity polarity = Polarity::forward;

  friend bool operator==(const Wire& a, const Wire& b) {
    return a.polarity == b.polarity && a.carrier == b.carrier;
  }
};

/// The type of one side of an open game: an ordered list of polarized wires.
/// The forward set is the product of the forward carriers in list order and
/// the backward set likewise; the empty list is the monoidal unit I = (1, 1).
class Boundary {
 public:
  Boundary();
  explicit Boundary(std::vector<Wire> wires);

  /// [X+]
  static Boundary covariant(const FiniteSet& x);
  /// [S-]
  static Boundary contravariant(const FiniteSet& s);
  /// [X+, S-], omitting any wire whose carrier is the unit set.
  static Boundary pair(const FiniteSet& x, const FiniteSet& s);

  const std::vector<Wire>& wires() const { return wires_; }
  bool is_unit() const { return wires_.empty(); }
  const FiniteSet& forward() const { return forward_; }
  const FiniteSet& backward() const { return backward_; }

  /// `[B+, B-]`, `[]` for I.
  std::string to_string() const;

  /// Exact wire-list equality.
  friend bool operator==(const Boundary& a, const Boundary& b) {
    return a.wires_ == b.wires_;
  }

 private:
  std::vector<Wire> wires_;
  FiniteSet forward_;
  FiniteSet backward_;
};

Boundary concat(const Boundary& a, const Boundary& b);

/// Equal as pairs of sets (forward, backward), ignoring wire grouping and
/// names. This is the typing used for 2-cells.
bool same_type(const Boundary& a, const Boundary& b);

}  // namespace og
