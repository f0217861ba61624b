#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "opengames/fn_table.hpp"

namespace og {

/// A multi-valued selection function (Y -> R) -> P(Y).
class SelectionFunction {
 public:
  using Select =
      std::function<std::vector<char>(std::span<const std::size_t> k)>;

  SelectionFunction(std::string name, FiniteSet choices, FiniteSet payoffs,
                    Select select);

  const std::string& name() const { return name_; }
  const FiniteSet& choice_set() const { return choices_; }
  const FiniteSet& payoff_set() const { return payoffs_; }

  /// Throws TypeMismatch unless k : choices -> payoffs.
  SubsetTable select(const FnTable& k) const;
  std::vector<char> select_mask(std::span<const std::size_t> k) const;

 private:
  std::string name_;
  FiniteSet choices_;
  FiniteSet payoffs_;
  Select select_;
};

/// Maximizers of k, with payoffs ordered by declaration order.
/// Throws EmptyPayoffOrder if `r` is empty while `y` is not.
SelectionFunction argmax_selection(const FiniteSet& y, const FiniteSet& r);

/// fix(k) = { x | x = k(x) }.
SelectionFunction fix_selection(const FiniteSet& x);

/// Always selects {choice}, whatever the continuation.
SelectionFunction const_selection(const FiniteSet& y, const FiniteSet& r,
                                  std::size_t choice);

}  // namespace og
