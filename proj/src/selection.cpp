#include "opengames/selection.hpp"

#include "opengames/errors.hpp"

namespace og {

SelectionFunction::SelectionFunction(std::string name, FiniteSet choices,
                                     FiniteSet payoffs, Select select)
    : name_(std::move(name)),
      choices_(std::move(choices)),
      payoffs_(std::move(payoffs)),
      select_(std::move(select)) {}

SubsetTable SelectionFunction::select(const FnTable& k) const {
  if (!same_elements(k.domain(), choices_) ||
      !same_elements(k.codomain(), payoffs_)) {
    throw TypeMismatch(name_ + " expects a continuation " + choices_.name() +
                       " -> " + payoffs_.name());
  }
  return SubsetTable(choices_, select_(k.images()));
}

std::vector<char> SelectionFunction::select_mask(
    std::span<const std::size_t> k) const {
  return select_(k);
}

SelectionFunction argmax_selection(const FiniteSet& y, const FiniteSet& r) {
  if (r.empty() && !y.empty()) {
    throw EmptyPayoffOrder("argmax over " + y.name() +
                           " needs a nonempty payoff set");
  }
  return SelectionFunction(
      "argmax", y, r, [](std::span<const std::size_t> k) {
        std::size_t best = 0;
        for (std::size_t v : k) best = std::max(best, v);
        std::vector<char> mask(k.size(), 0);
        for (std::size_t i = 0; i < k.size(); ++i) mask[i] = k[i] == best;
        return mask;
      });
}

SelectionFunction fix_selection(const FiniteSet& x) {
  return SelectionFunction("fix", x, x, [](std::span<const std::size_t> k) {
    std::vector<char> mask(k.size(), 0);
    for (std::size_t i = 0; i < k.size(); ++i) mask[i] = k[i] == i;
    return mask;
  });
}

SelectionFunction const_selection(const FiniteSet& y, const FiniteSet& r,
                                  std::size_t choice) {
  if (choice >= y.size()) {
    throw TypeMismatch("constant selection outside " + y.name());
  }
  return SelectionFunction(
      "const(" + y.element(choice).to_string() + ")", y, r,
      [choice, n = y.size()](std::span<const std::size_t>) {
        std::vector<char> mask(n, 0);
        mask[choice] = 1;
        return mask;
      });
}

}  // namespace og
