#include "opengames/generators.hpp"

#include "opengames/errors.hpp"

namespace og {

namespace {

using PlayFn = std::function<std::size_t(std::size_t s, std::size_t x)>;
using CoplayFn =
    std::function<std::size_t(std::size_t s, std::size_t x, std::size_t r)>;

OpenGame tabulate(Boundary dom, Boundary cod, FiniteSet strategies,
                  const PlayFn& play, const CoplayFn& coplay, EquilibriumFn eq,
                  bool always = false) {
  const std::size_t nx = dom.forward().size();
  const std::size_t nr = cod.backward().size();
  FnTable play_table = FnTable::from_indices(
      product(strategies, dom.forward()), cod.forward(),
      [&](std::size_t p) { return play(p / nx, p % nx); });
  const FiniteSet parts[] = {strategies, dom.forward(), cod.backward()};
  FnTable coplay_table = FnTable::from_indices(
      product(parts), dom.backward(), [&](std::size_t p) {
        const std::size_t sx = p / nr;
        return coplay(sx / nx, sx % nx, p % nr);
      });
  return OpenGame(std::move(dom), std::move(cod), std::move(strategies),
                  std::move(play_table), std::move(coplay_table),
                  std::move(eq), always);
}

EquilibriumFn always() {
  return [](std::size_t, std::span<const std::size_t>, std::size_t, EvalMode) {
    return true;
  };
}

std::size_t zero(std::size_t, std::size_t) { return 0; }
std::size_t zero3(std::size_t, std::size_t, std::size_t) { return 0; }

}  // namespace

OpenGame counit(const FiniteSet& x) {
  const Boundary dom({{x, Polarity::forward}, {x, Polarity::backward}});
  return OpenGame::strategically_trivial(
      dom, Boundary(), terminal(x),
      FnTable::from_indices(product(x, FiniteSet::unit()), x,
                            [](std::size_t p) { return p; }));
}

OpenGame lift_forward(const FnTable& f) {
  const FiniteSet one = FiniteSet::unit();
  return OpenGame::strategically_trivial(
      Boundary::covariant(f.domain()), Boundary::covariant(f.codomain()), f,
      FnTable::from_indices(product(f.domain(), one), one,
                            [](std::size_t) { return std::size_t{0}; }));
}

OpenGame lift_backward(const FnTable& f) {
  const FiniteSet one = FiniteSet::unit();
  return OpenGame::strategically_trivial(
      Boundary::contravariant(f.codomain()),
      Boundary::contravariant(f.domain()), identity_fn(one),
      FnTable::from_indices(product(one, f.domain()), f.codomain(),
                            [&](std::size_t r) { return f(r); }));
}

OpenGame agent(const SelectionFunction& e, const FiniteSet& x) {
  const FiniteSet& y = e.choice_set();
  const FiniteSet& r = e.payoff_set();
  const FiniteSet strategies = function_space(x, y);
  const std::size_t nx = x.size();
  const std::size_t ny = y.size();
  // Digit x of the strategy index, first observation most significant.
  std::vector<std::size_t> weight(nx, 1);
  for (std::size_t i = nx; i-- > 1;) weight[i - 1] = weight[i] * ny;
  PlayFn play = [weight, ny](std::size_t s, std::size_t obs) {
    return (s / weight[obs]) % ny;
  };
  EquilibriumFn eq = [e, play](std::size_t obs, std::span<const std::size_t> k,
                               std::size_t s, EvalMode) {
    return e.select_mask(k)[play(s, obs)] != 0;
  };
  return tabulate(Boundary::pair(x, FiniteSet::unit()), Boundary::pair(y, r),
                  strategies, play, zero3, std::move(eq));
}

OpenGame eta(const FiniteSet& x) {
  const Boundary cod({{x, Polarity::forward}, {x, Polarity::backward}});
  return tabulate(
      Boundary(), cod, x, [](std::size_t s, std::size_t) { return s; }, zero3,
      [](std::size_t, std::span<const std::size_t> k, std::size_t s,
         EvalMode) { return k[s] == s; });
}

OpenGame black(BlackKind kind, const FiniteSet& x) {
  const FiniteSet one = FiniteSet::unit();
  const Boundary xp = Boundary::covariant(x);
  const Boundary xm = Boundary::contravariant(x);
  auto to_one = [&](const FiniteSet& d) {
    return FnTable::from_indices(d, one,
                                 [](std::size_t) { return std::size_t{0}; });
  };
  switch (kind) {
    case BlackKind::delete_forward:
      return OpenGame::strategically_trivial(xp, Boundary(), terminal(x),
                                             to_one(product(x, one)));
    case BlackKind::copy_forward:
      return OpenGame::strategically_trivial(xp, concat(xp, xp), diagonal(x),
                                             to_one(product(x, one)));
    case BlackKind::delete_backward:
      return OpenGame::strategically_trivial(Boundary(), xm, identity_fn(one),
                                             to_one(product(one, x)));
    case BlackKind::copy_backward: {
      const std::size_t n = x.size();
      return OpenGame::strategically_trivial(
          concat(xm, xm), xm, identity_fn(one),
          FnTable::from_indices(product(one, x), product(x, x),
                                [n](std::size_t r) { return r * n + r; }));
    }
  }
  throw Error("unknown black generator");
}

OpenGame white(WhiteKind kind, const FiniteSet& x) {
  const Boundary xp = Boundary::covariant(x);
  const Boundary xm = Boundary::contravariant(x);
  const std::size_t n = x.size();
  auto strategy = [](std::size_t s, std::size_t) { return s; };
  auto strategy_back = [](std::size_t s, std::size_t, std::size_t) {
    return s;
  };
  switch (kind) {
    case WhiteKind::spawn_forward:
      return tabulate(Boundary(), xp, x, strategy, zero3, always(), true);
    case WhiteKind::merge_forward:
      return tabulate(concat(xp, xp), xp, x, strategy, zero3,
                      [n](std::size_t in, std::span<const std::size_t>,
                          std::size_t s, EvalMode) {
                        const std::size_t x1 = in / n, x2 = in % n;
                        return x1 == x2 && s == x1;
                      });
    case WhiteKind::spawn_backward:
      return tabulate(xm, Boundary(), x, zero, strategy_back, always(), true);
    case WhiteKind::merge_backward:
      return tabulate(xm, concat(xm, xm), x, zero, strategy_back,
                      [n](std::size_t, std::span<const std::size_t> k,
                          std::size_t s, EvalMode) {
                        const std::size_t r1 = k[0] / n, r2 = k[0] % n;
                        return r1 == r2 && s == r1;
                      });
  }
  throw Error("unknown white generator");
}

OpenGame snake(SnakeKind kind, const FiniteSet& x, SnakeForm form) {
  const Boundary xp = Boundary::covariant(x);
  const Boundary xm = Boundary::contravariant(x);
  if (form == SnakeForm::normal) {
    if (kind == SnakeKind::right) {
      return tabulate(xp, xp, x, [](std::size_t s, std::size_t) { return s; },
                      zero3,
                      [](std::size_t in, std::span<const std::size_t>,
                         std::size_t s, EvalMode) { return s == in; });
    }
    return tabulate(xm, xm, x, zero,
                    [](std::size_t s, std::size_t, std::size_t) { return s; },
                    [](std::size_t, std::span<const std::size_t> k,
                       std::size_t s, EvalMode) { return s == k[0]; });
  }
  if (kind == SnakeKind::right) {
    // (eta (x) id) ; (id (x) sym(X-, X+)) ; (id (x) counit)
    OpenGame g = compose(tensor(eta(x), identity(xp)),
                         tensor(identity(xp), sym(xm, xp)));
    return compose(g, tensor(identity(xp), counit(x)));
  }
  // (id (x) eta) ; (sym(X-, X+) (x) id) ; (counit (x) id)
  OpenGame g = compose(tensor(identity(xm), eta(x)),
                       tensor(sym(xm, xp), identity(xm)));
  return compose(g, tensor(counit(x), identity(xm)));
}

OpenGame loop(const FiniteSet& x) { return compose(eta(x), counit(x)); }

OpenGame coordination(const FiniteSet& x) {
  const Boundary xp = Boundary::covariant(x);
  const Boundary xm = Boundary::contravariant(x);
  // Cross the wires so each agent's prediction is checked against the other
  // agent's play: [a+, a-, b+, b-] -> [a+, b-, b+, a-].
  OpenGame g = compose(tensor(eta(x), eta(x)),
                       tensor(identity(xp), sym(xm, concat(xp, xm))));
  g = compose(g, tensor(tensor(identity(xp), sym(xp, xm)), identity(xm)));
  return compose(g, tensor(counit(x), counit(x)));
}

}  // namespace og
