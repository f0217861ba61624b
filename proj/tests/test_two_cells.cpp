#include <doctest.h>

#include <set>

#include "opengames/errors.hpp"
#include "opengames/generators.hpp"
#include "opengames/search.hpp"
#include "opengames/two_cells.hpp"

using namespace og;

namespace {

FiniteSet sized(std::size_t n) { return FiniteSet::range("B", n); }

// Direct reading of the three morphism conditions.
bool naive_is_morphism(const OpenGame& g, const OpenGame& h, const FnTable& a) {
  const std::size_t nx = g.dom().forward().size();
  const std::size_t nr = g.cod().backward().size();
  for (std::size_t s = 0; s < g.strategies().size(); ++s) {
    for (std::size_t x = 0; x < nx; ++x) {
      if (g.play(s, x) != h.play(a(s), x)) return false;
      for (std::size_t r = 0; r < nr; ++r) {
        if (g.coplay(s, x, r) != h.coplay(a(s), x, r)) return false;
      }
    }
  }
  for (const Context& c : all_contexts(g)) {
    const auto eg = nash(g, c, EvalMode::direct);
    const auto eh = nash(h, c, EvalMode::direct);
    for (std::size_t s : eg.indices()) {
      if (!eh.contains(a(s))) return false;
    }
  }
  return true;
}

std::set<std::vector<std::size_t>> brute_force(const OpenGame& g,
                                               const OpenGame& h) {
  std::set<std::vector<std::size_t>> out;
  for (const FnTable& a : enumerate_functions(g.strategies(), h.strategies())) {
    if (naive_is_morphism(g, h, a)) out.insert({a.images().begin(), a.images().end()});
  }
  return out;
}

std::set<std::vector<std::size_t>> found(const OpenGame& g, const OpenGame& h) {
  std::set<std::vector<std::size_t>> out;
  for (const GameMorphism& m : find_morphisms(g, h)) {
    out.insert({m.alpha.images().begin(), m.alpha.images().end()});
  }
  return out;
}

struct Pair {
  OpenGame g;
  OpenGame h;
};

std::vector<Pair> sample_pairs() {
  std::vector<Pair> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    const FiniteSet x = sized(n);
    const Boundary xp = Boundary::covariant(x);
    const Boundary xm = Boundary::contravariant(x);
    out.push_back({loop(x), identity(Boundary())});
    out.push_back({identity(Boundary()), loop(x)});
    out.push_back({snake(SnakeKind::right, x, SnakeForm::built), identity(xp)});
    out.push_back({identity(xp), snake(SnakeKind::right, x, SnakeForm::built)});
    out.push_back({snake(SnakeKind::left, x, SnakeForm::normal), identity(xm)});
    out.push_back({identity(xm), snake(SnakeKind::left, x, SnakeForm::normal)});
    out.push_back({snake(SnakeKind::right, x, SnakeForm::normal),
                   snake(SnakeKind::right, x, SnakeForm::built)});
    out.push_back({eta(x), agent(fix_selection(x), FiniteSet::unit())});
    out.push_back({eta(x), agent(argmax_selection(x, x), FiniteSet::unit())});
    out.push_back({agent(argmax_selection(x, x), FiniteSet::unit()), eta(x)});
  }
  const FiniteSet b = sized(2);
  const Boundary bp = Boundary::covariant(b);
  out.push_back({snake(SnakeKind::right, b, SnakeForm::normal),
                 compose(tensor(identity(bp), white(WhiteKind::spawn_forward, b)),
                         white(WhiteKind::merge_forward, b))});
  out.push_back({compose(tensor(identity(bp), white(WhiteKind::spawn_forward, b)),
                         white(WhiteKind::merge_forward, b)),
                 snake(SnakeKind::right, b, SnakeForm::normal)});
  return out;
}

}  // namespace

TEST_CASE("find_morphisms agrees with enumerating every alpha") {
  for (const Pair& p : sample_pairs()) {
    CHECK(found(p.g, p.h) == brute_force(p.g, p.h));
    CHECK(count_morphisms(p.g, p.h) == brute_force(p.g, p.h).size());
  }
}

TEST_CASE("check_morphism agrees with the naive reading") {
  for (const Pair& p : sample_pairs()) {
    for (const FnTable& a :
         enumerate_functions(p.g.strategies(), p.h.strategies())) {
      CHECK(check_morphism({p.g, p.h, a}).pass == naive_is_morphism(p.g, p.h, a));
    }
  }
}

TEST_CASE("identity alpha is a morphism from a game to itself") {
  for (const Pair& p : sample_pairs()) {
    CHECK(check_morphism({p.g, p.g, identity_fn(p.g.strategies())}).pass);
    CHECK(find_iso(p.g, p.g).has_value());
  }
}

TEST_CASE("right snake to identity fails on play") {
  const FiniteSet b = sized(2);
  const OpenGame tri = snake(SnakeKind::right, b, SnakeForm::built);
  const OpenGame id = identity(Boundary::covariant(b));
  const FnTable alpha = terminal(tri.strategies());
  const auto v = check_morphism({tri, id, FnTable(tri.strategies(), id.strategies(),
                                                  {alpha(0), alpha(1)})});
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.failure);
  CHECK(v.failure->condition == MorphismCondition::play);
  CHECK(tri.play(v.failure->sigma, v.failure->x) != v.failure->x);
  CHECK(find_morphisms(tri, id).empty());
  CHECK(find_morphisms(id, tri).empty());
}

TEST_CASE("loop collapses onto the empty diagram") {
  const FiniteSet b = sized(2);
  const auto forward = find_morphisms(loop(b), identity(Boundary()));
  CHECK(forward.size() == 1);
  CHECK(find_morphisms(identity(Boundary()), loop(b)).size() == 2);
  CHECK_FALSE(find_iso(loop(b), identity(Boundary())));
  CHECK(find_iso(loop(sized(1)), identity(Boundary())));
}

TEST_CASE("eta on the unit set is the identity on I") {
  CHECK(find_iso(eta(FiniteSet::unit()), identity(Boundary())));
}

TEST_CASE("empty source is flagged vacuous") {
  const FiniteSet empty = sized(0);
  const auto v = check_morphism(
      {loop(empty), identity(Boundary()),
       FnTable(loop(empty).strategies(), FiniteSet::unit(), {})});
  CHECK(v.pass);
  CHECK(v.vacuous);
  CHECK(count_morphisms(identity(Boundary()), loop(empty)) == 0);
}

TEST_CASE("check_iso needs a bijection") {
  const FiniteSet b = sized(2);
  const OpenGame g = eta(b);
  CHECK(check_iso(g, g, identity_fn(g.strategies())).pass);
  const auto v = check_iso(g, g, FnTable(g.strategies(), g.strategies(), {0, 0}));
  CHECK_FALSE(v.bijective);
  CHECK_FALSE(v.pass);
  // Swapping the strategies of eta breaks equilibria.
  CHECK_FALSE(check_iso(g, g, FnTable(g.strategies(), g.strategies(), {1, 0})).pass);
}

TEST_CASE("globularity is required") {
  const FiniteSet b = sized(2);
  CHECK_THROWS_AS(find_morphisms(eta(b), loop(b)), TypeMismatch);
  CHECK_THROWS_AS(sim_check(eta(b), loop(b)), TypeMismatch);
}

TEST_CASE("vertical composites of morphisms are morphisms") {
  const FiniteSet b = sized(2);
  const OpenGame games[] = {
      identity(Boundary()), loop(b), loop(sized(3)), coordination(b),
      compose(loop(b), loop(b))};
  for (const OpenGame& g : games) {
    for (const OpenGame& h : games) {
      for (const OpenGame& k : games) {
        for (const GameMorphism& a : find_morphisms(g, h)) {
          for (const GameMorphism& c : find_morphisms(h, k)) {
            CHECK(check_morphism({g, k, compose_fn(a.alpha, c.alpha)}).pass);
          }
        }
      }
    }
  }
}

TEST_CASE("snakes are ~ identities") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const FiniteSet x = sized(n);
    CHECK(sim_check(snake(SnakeKind::right, x, SnakeForm::built),
                    identity(Boundary::covariant(x)))
              .pass);
    CHECK(sim_check(snake(SnakeKind::left, x, SnakeForm::built),
                    identity(Boundary::contravariant(x)))
              .pass);
  }
}

TEST_CASE("sim witnesses satisfy the defining equalities") {
  const FiniteSet x = sized(2);
  const OpenGame g = snake(SnakeKind::right, x, SnakeForm::normal);
  const OpenGame h = identity(Boundary::covariant(x));
  const auto v = sim_check(g, h, true);
  REQUIRE(v.pass);
  CHECK(v.contexts == 2);
  CHECK_FALSE(v.witnesses.empty());
  for (const SimWitness& w : v.witnesses) {
    CHECK(nash(g, w.context).contains(w.left));
    CHECK(nash(h, w.context).contains(w.right));
    CHECK(g.play(w.left, w.context.x) == w.play);
    CHECK(h.play(w.right, w.context.x) == w.play);
    CHECK(g.coplay(w.left, w.context.x, w.context.k(w.play)) == w.coplay);
    CHECK(h.coplay(w.right, w.context.x, w.context.k(w.play)) == w.coplay);
  }
}

TEST_CASE("sim agrees with signature equality and is an equivalence") {
  const std::vector<Term> terms = enumerate_terms(1, 2);
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < terms.size() && picks.size() < 120; i += 3) picks.push_back(i);
  for (std::size_t i : picks) {
    const OpenGame& g = terms[i].game;
    CHECK(sim_check(g, g).pass);
    for (std::size_t j : picks) {
      const OpenGame& h = terms[j].game;
      if (!same_type(g.dom(), h.dom()) || !same_type(g.cod(), h.cod())) continue;
      const bool gh = sim_check(g, h).pass;
      CHECK(gh == sim_check(h, g).pass);
      CHECK(gh == (sim_signature(g) == sim_signature(h)));
    }
  }
}

TEST_CASE("sim failure reports an unmatched equilibrium") {
  const FiniteSet b = sized(2);
  const OpenGame g = agent(argmax_selection(b, b), FiniteSet::unit());
  const OpenGame h = agent(const_selection(b, b, 0), FiniteSet::unit());
  const auto v = sim_check(g, h);
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.failure);
  const OpenGame& side = v.failure->from_left ? g : h;
  CHECK(nash(side, v.failure->context).contains(v.failure->strategy));
}

TEST_CASE("term enumeration keeps one term per iso class") {
  const auto terms = enumerate_terms(1, 2);
  std::set<std::string> keys;
  for (const Term& t : terms) CHECK(keys.insert(Profile(t.game).iso_key()).second);
  CHECK(terms.front().depth == 0);
  CHECK(terms.back().depth == 1);
}

TEST_CASE("singleton carriers exhaust the search at depth 0") {
  const auto r = sim_compositionality_search(0, 1);
  CHECK_FALSE(r.counterexample);
  CHECK(r.depth_reached == 0);
  CHECK(r.terms_per_depth.size() == 1);
}

TEST_CASE("search hits are re-verified") {
  const auto r = sim_compositionality_search(1, 2);
  REQUIRE(r.counterexample);
  const SimCounterexample& cx = *r.counterexample;
  CHECK(cx.verified);
  CHECK(sim_check(cx.g.game, cx.g2.game).pass);
  CHECK(sim_check(cx.h.game, cx.h2.game).pass);
  CHECK_FALSE(sim_check(compose(cx.g.game, cx.h.game),
                        compose(cx.g2.game, cx.h2.game))
                  .pass);
}
