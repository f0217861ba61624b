#include "opengames/laws.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <random>

#include "opengames/errors.hpp"
#include "opengames/generators.hpp"
#include "opengames/parallel.hpp"
#include "opengames/search.hpp"
#include "opengames/size_guard.hpp"

namespace og {

namespace {

const char* const kIso = "iso";
const char* const kExists = "morphism-exists";
const char* const kAbsent = "morphism-absent";
const char* const kTwoWay = "two-way-non-iso";
const char* const kSim = "sim-equivalent";

Json set_json(const FiniteSet& s) {
  return Json{{"name", s.name()}, {"size", s.size()}};
}

LawInstance verdict(std::string id, Json parameters, std::string expected,
                    std::string observed, Json details, bool vacuous = false) {
  LawInstance r;
  r.law_id = std::move(id);
  r.parameters = std::move(parameters);
  r.status = observed != expected ? Status::fail
             : vacuous            ? Status::vacuous
                                  : Status::pass;
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.details = std::move(details);
  return r;
}

Json failure_json(const MorphismVerdict& v, const OpenGame& source) {
  if (!v.failure) return nullptr;
  return v.failure->describe(source);
}

// The observed relation between g and h, given candidate witnesses.
std::string classify(const OpenGame& g, const OpenGame& h) {
  if (find_iso(g, h)) return kIso;
  const bool there = count_morphisms(g, h) > 0;
  const bool back = count_morphisms(h, g) > 0;
  if (there && back) return kTwoWay;
  return there ? kExists : kAbsent;
}

LawInstance aggregate(std::string id, Json parameters, std::string expected,
                      const std::vector<LawInstance>& parts) {
  Json failures = Json::array();
  bool all_vacuous = !parts.empty();
  std::string observed = expected;
  for (const LawInstance& p : parts) {
    all_vacuous = all_vacuous && p.status == Status::vacuous;
    if (p.status == Status::fail) {
      if (observed == expected) observed = p.observed;
      if (failures.size() < 5) {
        failures.push_back(Json{{"parameters", p.parameters},
                                {"observed", p.observed},
                                {"details", p.details}});
      }
    }
  }
  Json details{{"instances", parts.size()}, {"failures", failures}};
  return verdict(std::move(id), std::move(parameters), std::move(expected),
                 std::move(observed), std::move(details), all_vacuous);
}

std::vector<FnTable> functions_between_carriers(std::size_t n) {
  const FiniteSet carriers[] = {FiniteSet::range("X", n),
                                FiniteSet::range("Y", n)};
  std::vector<FnTable> out;
  for (const FiniteSet& a : carriers) {
    for (const FiniteSet& b : carriers) {
      for (FnTable& f : enumerate_functions(a, b)) out.push_back(std::move(f));
    }
  }
  return out;
}

Boundary plus(const FiniteSet& x) { return Boundary::covariant(x); }
Boundary minus(const FiniteSet& x) { return Boundary::contravariant(x); }

// Leaf maps for relabel_by_leaves.
std::vector<Value> copy_leaves(const std::vector<Value>& v) {
  std::vector<Value> out;
  for (const Value& x : v) {
    out.push_back(x);
    out.push_back(x);
  }
  return out;
}

std::vector<Value> delete_leaves(const std::vector<Value>&) { return {}; }

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    case Status::exhausted: return "exhausted";
  }
  return "fail";
}

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::iso: return kIso;
    case Expectation::morphism_exists: return kExists;
    case Expectation::morphism_absent: return kAbsent;
    case Expectation::two_way_non_iso: return kTwoWay;
    case Expectation::sim_equivalent: return kSim;
  }
  return "";
}

FnTable relabel_by_leaves(
    const FiniteSet& from, const FiniteSet& to,
    const std::function<std::vector<Value>(const std::vector<Value>&)>& map) {
  std::map<std::vector<Value>, std::size_t> index;
  for (std::size_t t = 0; t < to.size(); ++t) {
    auto [it, fresh] = index.try_emplace(non_unit_leaves(to.element(t)), t);
    if (!fresh) throw Error("relabel: leaves of " + to.name() + " are not unique");
  }
  return FnTable::from_indices(from, to, [&](std::size_t s) {
    const auto it = index.find(map(non_unit_leaves(from.element(s))));
    if (it == index.end()) {
      throw Error("relabel: no image for " + from.element(s).to_string());
    }
    return it->second;
  });
}

FnTable relabel(const FiniteSet& from, const FiniteSet& to,
                const std::function<Value(const Value&)>& map) {
  return FnTable::from_values(from, to, map);
}

LawInstance law_f_slide_counit(const FnTable& f) {
  const FiniteSet& x = f.domain();
  const FiniteSet& y = f.codomain();
  const OpenGame lhs =
      compose(tensor(lift_forward(f), identity(minus(y))), counit(y));
  const OpenGame rhs =
      compose(tensor(identity(plus(x)), lift_backward(f)), counit(x));
  const auto alpha = find_iso(lhs, rhs);
  Json details{{"alpha", alpha ? Json(alpha->to_string()) : Json(nullptr)}};
  return verdict("f_slide_counit",
                 Json{{"f", f.to_string()},
                      {"domain", set_json(x)},
                      {"codomain", set_json(y)}},
                 kIso, alpha ? kIso : classify(lhs, rhs), std::move(details),
                 lhs.context_count() == 0);
}

LawInstance law_f_slide_eta(const FnTable& f) {
  const FiniteSet& x = f.domain();
  const FiniteSet& y = f.codomain();
  const OpenGame lhs =
      compose(eta(x), tensor(lift_forward(f), identity(minus(x))));
  const OpenGame rhs =
      compose(eta(y), tensor(identity(plus(y)), lift_backward(f)));
  const FnTable alpha = relabel_by_leaves(
      lhs.strategies(), rhs.strategies(),
      [&](const std::vector<Value>& v) {
        return std::vector<Value>{f.apply(v.at(0))};
      });
  const MorphismVerdict v = check_morphism({lhs, rhs, alpha});
  return verdict("f_slide_eta",
                 Json{{"f", f.to_string()},
                      {"domain", set_json(x)},
                      {"codomain", set_json(y)}},
                 kExists, v.pass ? kExists : "alpha-fails",
                 Json{{"alpha", alpha.to_string()},
                      {"counterexample", failure_json(v, lhs)}},
                 v.vacuous);
}

LawInstance law_eta_unit() {
  const auto alpha = find_iso(eta(FiniteSet::unit()), identity(Boundary()));
  return verdict("eta_unit", Json::object(), kIso,
                 alpha ? kIso : classify(eta(FiniteSet::unit()),
                                         identity(Boundary())),
                 Json{{"alpha", alpha ? Json(alpha->to_string()) : Json()}});
}

LawInstance law_eta_product(const FiniteSet& x, const FiniteSet& y) {
  const OpenGame lhs = eta(product(x, y));
  const OpenGame rhs = compose(
      tensor(eta(x), eta(y)),
      tensor(tensor(identity(plus(x)), sym(minus(x), plus(y))),
             identity(minus(y))));
  const FnTable alpha = relabel_by_leaves(
      lhs.strategies(), rhs.strategies(),
      [](const std::vector<Value>& v) { return v; });
  const IsoVerdict v = check_iso(lhs, rhs, alpha);
  std::string observed = kIso;
  if (!v.pass) observed = classify(lhs, rhs);
  return verdict("eta_product", Json{{"x", set_json(x)}, {"y", set_json(y)}},
                 kIso, observed,
                 Json{{"alpha", alpha.to_string()},
                      {"forward", failure_json(v.forward, lhs)},
                      {"backward", failure_json(v.backward, rhs)}},
                 v.forward.vacuous);
}

LawInstance law_loop_collapse(const FiniteSet& x) {
  const OpenGame g = loop(x);
  const OpenGame id = identity(Boundary());
  const auto forward = find_morphisms(g, id);
  const std::size_t reverse = count_morphisms(id, g);
  const bool iso = find_iso(g, id).has_value();
  const std::string expected = x.size() == 1 ? kIso : kExists;
  std::string observed = iso                ? kIso
                         : !forward.empty() ? kExists
                                            : kAbsent;
  // Forward morphism is unique; the reverse count is |X|.
  if (observed == expected &&
      (forward.size() != 1 || reverse != x.size())) {
    observed = "count-mismatch";
  }
  return verdict(
      "loop_collapse", Json{{"x", set_json(x)}}, expected, observed,
      Json{{"forward_count", forward.size()},
           {"reverse_count", reverse},
           {"alpha", forward.empty() ? Json() : Json(forward[0].alpha.to_string())}},
      x.size() == 0);
}

LawInstance law_snake_not_identity(const FiniteSet& x) {
  const OpenGame right = snake(SnakeKind::right, x, SnakeForm::built);
  const OpenGame left = snake(SnakeKind::left, x, SnakeForm::built);
  const OpenGame id_plus = identity(plus(x));
  const OpenGame id_minus = identity(minus(x));
  const std::size_t counts[] = {
      count_morphisms(right, id_plus), count_morphisms(id_plus, right),
      count_morphisms(left, id_minus), count_morphisms(id_minus, left)};
  const bool isos = find_iso(right, id_plus).has_value() &&
                    find_iso(left, id_minus).has_value();
  const bool none = std::ranges::all_of(counts, [](std::size_t c) {
    return c == 0;
  });
  const std::string expected = x.size() == 1 ? kIso : kAbsent;
  const std::string observed = isos ? kIso : none ? kAbsent : kExists;
  return verdict("snake_not_identity", Json{{"x", set_json(x)}}, expected,
                 observed,
                 Json{{"right_to_identity", counts[0]},
                      {"identity_to_right", counts[1]},
                      {"left_to_identity", counts[2]},
                      {"identity_to_left", counts[3]}});
}

LawInstance law_sim_snake(const FiniteSet& x) {
  const SimVerdict right = sim_check(snake(SnakeKind::right, x, SnakeForm::built),
                                     identity(plus(x)));
  const SimVerdict left = sim_check(snake(SnakeKind::left, x, SnakeForm::built),
                                    identity(minus(x)));
  Json details{{"right_contexts", right.contexts},
               {"left_contexts", left.contexts}};
  if (right.failure) details["right_failure"] = right.failure->context.k.to_string();
  if (left.failure) details["left_failure"] = left.failure->context.k.to_string();
  return verdict("sim_snake", Json{{"x", set_json(x)}}, kSim,
                 right.pass && left.pass ? kSim : "not-sim", std::move(details),
                 right.vacuous && left.vacuous);
}

LawInstance law_white_slide(const OpenGame& g, Side side) {
  OpenGame lhs = g;
  OpenGame rhs = g;
  FnTable alpha;
  const std::size_t ns = g.strategies().size();
  if (side == Side::covariant) {
    const FiniteSet& x = g.dom().forward();
    const FiniteSet& y = g.cod().forward();
    lhs = compose(snake(SnakeKind::right, x, SnakeForm::normal), g);
    rhs = compose(g, snake(SnakeKind::right, y, SnakeForm::normal));
    // (x, sigma) -> (sigma, P(sigma, x))
    alpha = FnTable::from_indices(
        lhs.strategies(), rhs.strategies(), [&](std::size_t p) {
          const std::size_t x0 = p / ns, s = p % ns;
          return s * y.size() + g.play(s, x0);
        });
  } else {
    const FiniteSet& y = g.dom().backward();
    const FiniteSet& x = g.cod().backward();
    lhs = compose(g, snake(SnakeKind::left, x, SnakeForm::normal));
    rhs = compose(snake(SnakeKind::left, y, SnakeForm::normal), g);
    // (sigma, x) -> (C(sigma, *, x), sigma)
    alpha = FnTable::from_indices(
        lhs.strategies(), rhs.strategies(), [&](std::size_t p) {
          const std::size_t s = p / x.size(), x0 = p % x.size();
          return g.coplay(s, 0, x0) * ns + s;
        });
  }
  const MorphismVerdict v = check_morphism({lhs, rhs, alpha});
  return verdict(side == Side::covariant ? "white_slide_covariant"
                                         : "white_slide_contravariant",
                 Json{{"game", g.dom().to_string() + " -> " + g.cod().to_string()},
                      {"strategies", ns}},
                 kExists, v.pass ? kExists : "alpha-fails",
                 Json{{"counterexample", failure_json(v, lhs)}}, v.vacuous);
}

LawInstance law_white_unit(const FiniteSet& x) {
  const std::string expected = x.size() == 1 ? kIso : kTwoWay;
  const OpenGame right = snake(SnakeKind::right, x, SnakeForm::normal);
  const OpenGame plus_unit =
      compose(tensor(identity(plus(x)), white(WhiteKind::spawn_forward, x)),
              white(WhiteKind::merge_forward, x));
  const OpenGame left = snake(SnakeKind::left, x, SnakeForm::normal);
  const OpenGame minus_unit =
      compose(white(WhiteKind::merge_backward, x),
              tensor(identity(minus(x)), white(WhiteKind::spawn_backward, x)));
  // Leaves are (spawn, merge) on the covariant side, (merge, spawn) on the
  // contravariant side; the reverse maps keep the merge strategy.
  const MorphismVerdict checks[] = {
      check_morphism({right, plus_unit,
                      relabel_by_leaves(right.strategies(),
                                        plus_unit.strategies(), copy_leaves)}),
      check_morphism(
          {plus_unit, right,
           relabel_by_leaves(plus_unit.strategies(), right.strategies(),
                             [](const std::vector<Value>& v) {
                               return std::vector<Value>{v.at(1)};
                             })}),
      check_morphism({left, minus_unit,
                      relabel_by_leaves(left.strategies(),
                                        minus_unit.strategies(), copy_leaves)}),
      check_morphism(
          {minus_unit, left,
           relabel_by_leaves(minus_unit.strategies(), left.strategies(),
                             [](const std::vector<Value>& v) {
                               return std::vector<Value>{v.at(0)};
                             })}),
  };
  const bool isos = find_iso(right, plus_unit).has_value() &&
                    find_iso(left, minus_unit).has_value();
  const bool two_way = std::ranges::all_of(
      checks, [](const MorphismVerdict& v) { return v.pass; });
  const std::string observed = isos      ? kIso
                               : two_way ? kTwoWay
                                         : "alpha-fails";
  Json details = Json::object();
  const char* names[] = {"plus_forward", "plus_reverse", "minus_forward",
                         "minus_reverse"};
  const OpenGame* sources[] = {&right, &plus_unit, &left, &minus_unit};
  for (std::size_t i = 0; i < 4; ++i) {
    details[names[i]] = checks[i].pass ? Json("pass")
                                       : failure_json(checks[i], *sources[i]);
  }
  return verdict("white_unit", Json{{"x", set_json(x)}}, expected, observed,
                 std::move(details));
}

LawInstance law_white_assoc(const FiniteSet& x) {
  const OpenGame mp = white(WhiteKind::merge_forward, x);
  const OpenGame mm = white(WhiteKind::merge_backward, x);
  const bool plus_iso =
      find_iso(compose(tensor(mp, identity(plus(x))), mp),
               compose(tensor(identity(plus(x)), mp), mp))
          .has_value();
  const bool minus_iso =
      find_iso(compose(mm, tensor(mm, identity(minus(x)))),
               compose(mm, tensor(identity(minus(x)), mm)))
          .has_value();
  return verdict("white_assoc", Json{{"x", set_json(x)}}, kIso,
                 plus_iso && minus_iso ? kIso : "no-iso",
                 Json{{"plus", plus_iso}, {"minus", minus_iso}});
}

LawInstance law_white_comm(const FiniteSet& x) {
  const OpenGame mp = white(WhiteKind::merge_forward, x);
  const OpenGame mm = white(WhiteKind::merge_backward, x);
  const bool plus_iso =
      find_iso(compose(sym(plus(x), plus(x)), mp), mp).has_value();
  const bool minus_iso =
      find_iso(compose(mm, sym(minus(x), minus(x))), mm).has_value();
  return verdict("white_comm", Json{{"x", set_json(x)}}, kIso,
                 plus_iso && minus_iso ? kIso : "no-iso",
                 Json{{"plus", plus_iso}, {"minus", minus_iso}});
}

LawInstance law_bialgebra(const FiniteSet& x) {
  const OpenGame copy_f = black(BlackKind::copy_forward, x);
  const OpenGame del_f = black(BlackKind::delete_forward, x);
  const OpenGame copy_b = black(BlackKind::copy_backward, x);
  const OpenGame del_b = black(BlackKind::delete_backward, x);
  const OpenGame merge_f = white(WhiteKind::merge_forward, x);
  const OpenGame spawn_f = white(WhiteKind::spawn_forward, x);
  const OpenGame merge_b = white(WhiteKind::merge_backward, x);
  const OpenGame spawn_b = white(WhiteKind::spawn_backward, x);
  const OpenGame id_i = identity(Boundary());
  const OpenGame middle_f =
      tensor(tensor(identity(plus(x)), sym(plus(x), plus(x))),
             identity(plus(x)));
  const OpenGame middle_b =
      tensor(tensor(identity(minus(x)), sym(minus(x), minus(x))),
             identity(minus(x)));
  using LeafMap = std::vector<Value> (*)(const std::vector<Value>&);
  struct Cell {
    const char* name;
    OpenGame lhs;
    OpenGame rhs;
    LeafMap alpha;
  };
  const Cell cells[] = {
      {"spawn_copy_forward", compose(spawn_f, copy_f), tensor(spawn_f, spawn_f),
       copy_leaves},
      {"delete_merge_backward", compose(del_b, merge_b), tensor(del_b, del_b),
       delete_leaves},
      {"copy_spawn_backward", compose(copy_b, spawn_b), tensor(spawn_b, spawn_b),
       copy_leaves},
      {"merge_delete_forward", compose(merge_f, del_f), tensor(del_f, del_f),
       delete_leaves},
      {"spawn_delete_forward", compose(spawn_f, del_f), id_i, delete_leaves},
      {"delete_spawn_backward", compose(del_b, spawn_b), id_i, delete_leaves},
      {"merge_copy_forward", compose(merge_f, copy_f),
       compose(compose(tensor(copy_f, copy_f), middle_f),
               tensor(merge_f, merge_f)),
       copy_leaves},
      {"copy_merge_backward", compose(copy_b, merge_b),
       compose(compose(tensor(merge_b, merge_b), middle_b),
               tensor(copy_b, copy_b)),
       copy_leaves},
  };
  Json details = Json::object();
  bool all = true;
  for (const Cell& c : cells) {
    const MorphismVerdict v = check_morphism(
        {c.lhs, c.rhs,
         relabel_by_leaves(c.lhs.strategies(), c.rhs.strategies(), c.alpha)});
    all = all && v.pass;
    details[c.name] = v.pass ? Json("pass") : failure_json(v, c.lhs);
  }
  return verdict("bialgebra", Json{{"x", set_json(x)}}, kExists,
                 all ? kExists : "alpha-fails", std::move(details));
}

OpenGame random_table_game(const Boundary& dom, const Boundary& cod,
                           std::size_t strategies, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FiniteSet sigma = FiniteSet::range("S", strategies);
  const std::size_t nx = dom.forward().size();
  const std::size_t ny = cod.forward().size();
  const std::size_t nr = cod.backward().size();
  const std::size_t ns = dom.backward().size();
  FnTable play = FnTable::from_indices(
      product(sigma, dom.forward()), cod.forward(),
      [&](std::size_t) { return static_cast<std::size_t>(rng() % ny); });
  const FiniteSet parts[] = {sigma, dom.forward(), cod.backward()};
  FnTable coplay = FnTable::from_indices(
      product(parts), dom.backward(),
      [&](std::size_t) { return static_cast<std::size_t>(rng() % ns); });
  const std::size_t nk = saturating_pow(nr, ny);
  const std::size_t contexts = saturating_mul(nx, nk);
  check_size(saturating_mul(contexts, strategies), "random equilibrium table");
  auto bits = std::make_shared<std::vector<char>>(contexts * strategies);
  for (char& b : *bits) b = static_cast<char>(rng() & 1U);
  EquilibriumFn eq = [bits, nr, nk, strategies](
                         std::size_t x, std::span<const std::size_t> k,
                         std::size_t s, EvalMode) {
    std::size_t c = 0;
    for (std::size_t v : k) c = c * nr + v;
    return (*bits)[(x * nk + c) * strategies + s] != 0;
  };
  return OpenGame(dom, cod, sigma, std::move(play), std::move(coplay),
                  std::move(eq));
}

namespace {

const std::vector<Term>& sample_terms(std::size_t set_size) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Term>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(set_size);
  if (it == cache.end()) {
    TermLimits limits;
    limits.max_strategies = 8;
    std::vector<Term> all = enumerate_terms(1, set_size, limits);
    it = cache.emplace(set_size, std::move(all)).first;
  }
  return it->second;
}

constexpr std::size_t kMaxSampleContexts = 4096;
constexpr std::size_t kMaxSampleStrategies = 256;

std::size_t contexts_of(const Boundary& dom, const Boundary& cod) {
  return saturating_mul(dom.forward().size(),
                        saturating_pow(cod.backward().size(),
                                       cod.forward().size()));
}

class Sampler {
 public:
  Sampler(const std::vector<Term>& terms, std::uint64_t seed)
      : terms_(terms), rng_(seed) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      by_dom_[terms[i].game.dom().to_string()].push_back(i);
    }
  }

  const Term& any() { return terms_[rng_() % terms_.size()]; }

  /// A term whose domain is `b`, if any.
  const Term* after(const Boundary& b) {
    const auto it = by_dom_.find(b.to_string());
    if (it == by_dom_.end()) return nullptr;
    return &terms_[it->second[rng_() % it->second.size()]];
  }

  std::size_t pick(std::size_t n) { return rng_() % n; }

 private:
  const std::vector<Term>& terms_;
  std::mt19937_64 rng_;
  std::map<std::string, std::vector<std::size_t>> by_dom_;
};

Value pair_of(Value a, Value b) { return Value::tuple({std::move(a), std::move(b)}); }
Value star() { return Value::atom(kStar); }

struct MonoidalCase {
  std::string text;
  OpenGame lhs;
  OpenGame rhs;
  std::function<Value(const Value&)> alpha;
};

bool small_enough(const OpenGame& g) {
  return g.strategies().size() <= kMaxSampleStrategies &&
         g.context_count() <= kMaxSampleContexts;
}

bool small_enough(std::initializer_list<const Term*> parts, const Boundary& dom,
                  const Boundary& cod) {
  std::size_t strategies = 1;
  for (const Term* t : parts) {
    strategies = saturating_mul(strategies, t->game.strategies().size());
  }
  return strategies <= kMaxSampleStrategies &&
         contexts_of(dom, cod) <= kMaxSampleContexts;
}

std::optional<MonoidalCase> draw(MonoidalLaw law, Sampler& s) {
  switch (law) {
    case MonoidalLaw::assoc_seq: {
      const Term& g = s.any();
      const Term* h = s.after(g.game.cod());
      if (!h) return std::nullopt;
      const Term* k = s.after(h->game.cod());
      if (!k || !small_enough({&g, h, k}, g.game.dom(), k->game.cod())) {
        return std::nullopt;
      }
      return MonoidalCase{
          g.text + " ; " + h->text + " ; " + k->text,
          compose(compose(g.game, h->game), k->game),
          compose(g.game, compose(h->game, k->game)), [](const Value& v) {
            const Value& ab = v.items()[0];
            return pair_of(ab.items()[0], pair_of(ab.items()[1], v.items()[1]));
          }};
    }
    case MonoidalLaw::assoc_tensor: {
      const Term& g = s.any();
      const Term& h = s.any();
      const Term& k = s.any();
      const Boundary dom = concat(concat(g.game.dom(), h.game.dom()), k.game.dom());
      const Boundary cod = concat(concat(g.game.cod(), h.game.cod()), k.game.cod());
      if (!small_enough({&g, &h, &k}, dom, cod)) return std::nullopt;
      return MonoidalCase{
          g.text + " , " + h.text + " , " + k.text,
          tensor(tensor(g.game, h.game), k.game),
          tensor(g.game, tensor(h.game, k.game)), [](const Value& v) {
            const Value& ab = v.items()[0];
            return pair_of(ab.items()[0], pair_of(ab.items()[1], v.items()[1]));
          }};
    }
    case MonoidalLaw::unit: {
      const Term& g = s.any();
      if (!small_enough(g.game)) return std::nullopt;
      // G >> id, id >> G, G * id([]), id([]) * G, each against G.
      const std::size_t which = s.pick(4);
      const OpenGame& game = g.game;
      switch (which) {
        case 0:
          return MonoidalCase{g.text + " >> id", compose(game, identity(game.cod())),
                              game, [](const Value& v) { return v.items()[0]; }};
        case 1:
          return MonoidalCase{"id >> " + g.text, compose(identity(game.dom()), game),
                              game, [](const Value& v) { return v.items()[1]; }};
        case 2:
          return MonoidalCase{g.text + " * id([])",
                              tensor(game, identity(Boundary())), game,
                              [](const Value& v) { return v.items()[0]; }};
        default:
          return MonoidalCase{"id([]) * " + g.text,
                              tensor(identity(Boundary()), game), game,
                              [](const Value& v) { return v.items()[1]; }};
      }
    }
    case MonoidalLaw::interchange: {
      const Term& g1 = s.any();
      const Term* h1 = s.after(g1.game.cod());
      const Term& g2 = s.any();
      const Term* h2 = s.after(g2.game.cod());
      if (!h1 || !h2) return std::nullopt;
      const Boundary dom = concat(g1.game.dom(), g2.game.dom());
      const Boundary cod = concat(h1->game.cod(), h2->game.cod());
      if (!small_enough({&g1, h1, &g2, h2}, dom, cod)) return std::nullopt;
      return MonoidalCase{
          "(" + g1.text + " >> " + h1->text + ") * (" + g2.text + " >> " +
              h2->text + ")",
          tensor(compose(g1.game, h1->game), compose(g2.game, h2->game)),
          compose(tensor(g1.game, g2.game), tensor(h1->game, h2->game)),
          [](const Value& v) {
            const Value& l = v.items()[0];
            const Value& r = v.items()[1];
            return pair_of(pair_of(l.items()[0], r.items()[0]),
                           pair_of(l.items()[1], r.items()[1]));
          }};
    }
    case MonoidalLaw::symmetry: {
      const Term& g = s.any();
      const Term& h = s.any();
      const Boundary dom = concat(g.game.dom(), h.game.dom());
      const Boundary cod = concat(g.game.cod(), h.game.cod());
      if (!small_enough({&g, &h}, dom, cod)) return std::nullopt;
      if (s.pick(2) == 0) {
        // sym(A, B) >> sym(B, A) against id(A * B), A and B from the domains.
        const Boundary& a = g.game.dom();
        const Boundary& b = h.game.dom();
        if (contexts_of(concat(a, b), concat(a, b)) > kMaxSampleContexts) {
          return std::nullopt;
        }
        return MonoidalCase{"sym(" + a.to_string() + ", " + b.to_string() + ")",
                            compose(sym(a, b), sym(b, a)), identity(concat(a, b)),
                            [](const Value&) { return star(); }};
      }
      // Naturality: (G * H) >> sym(C, D) against sym(A, B) >> (H * G).
      return MonoidalCase{
          g.text + " , " + h.text,
          compose(tensor(g.game, h.game), sym(g.game.cod(), h.game.cod())),
          compose(sym(g.game.dom(), h.game.dom()), tensor(h.game, g.game)),
          [](const Value& v) {
            const Value& ab = v.items()[0];
            return pair_of(star(), pair_of(ab.items()[1], ab.items()[0]));
          }};
    }
  }
  return std::nullopt;
}

const char* monoidal_id(MonoidalLaw law) {
  switch (law) {
    case MonoidalLaw::assoc_seq: return "monoidal_assoc_seq";
    case MonoidalLaw::assoc_tensor: return "monoidal_assoc_tensor";
    case MonoidalLaw::unit: return "monoidal_unit";
    case MonoidalLaw::interchange: return "monoidal_interchange";
    case MonoidalLaw::symmetry: return "monoidal_symmetry";
  }
  return "monoidal";
}

}  // namespace

LawInstance law_monoidal(MonoidalLaw law, std::size_t set_size,
                         std::size_t samples, std::uint64_t seed) {
  const std::vector<Term>& terms = sample_terms(set_size);
  Sampler sampler(terms, seed);
  std::vector<LawInstance> parts;
  std::size_t attempts = 0;
  while (parts.size() < samples && attempts < samples * 200) {
    ++attempts;
    std::optional<MonoidalCase> c = draw(law, sampler);
    if (!c) continue;
    const FnTable alpha = relabel(c->lhs.strategies(), c->rhs.strategies(), c->alpha);
    const IsoVerdict v = check_iso(c->lhs, c->rhs, alpha);
    Json details{{"terms", c->text}};
    if (!v.pass) {
      details["forward"] = failure_json(v.forward, c->lhs);
      details["backward"] = failure_json(v.backward, c->rhs);
      details["bijective"] = v.bijective;
    }
    parts.push_back(verdict(monoidal_id(law), Json{{"sample", parts.size()}},
                            kIso, v.pass ? kIso : "alpha-fails",
                            std::move(details),
                            v.forward.vacuous && v.backward.vacuous));
  }
  LawInstance out =
      aggregate(monoidal_id(law),
                Json{{"size", set_size}, {"samples", samples}, {"seed", seed}},
                kIso, parts);
  if (parts.size() < samples) {
    out.status = Status::fail;
    out.observed = "too-few-samples";
  }
  return out;
}

namespace {

struct SuiteJob {
  std::string id;
  std::size_t size;
  std::function<LawInstance()> run;
};

std::vector<SuiteJob> suite_jobs(const std::vector<std::size_t>& sizes,
                                 std::size_t samples) {
  std::vector<SuiteJob> jobs;
  for (std::size_t n : sizes) {
    const FiniteSet x = FiniteSet::range("X", n);
    jobs.push_back({"loop_collapse", n, [x] { return law_loop_collapse(x); }});
    if (n == 0) continue;
    if (n == 1) jobs.push_back({"eta_unit", n, [] { return law_eta_unit(); }});
    jobs.push_back({"f_slide_counit", n, [n] {
      std::vector<LawInstance> parts;
      for (const FnTable& f : functions_between_carriers(n))
        parts.push_back(law_f_slide_counit(f));
      return aggregate("f_slide_counit", Json{{"size", n}}, kIso, parts);
    }});
    jobs.push_back({"f_slide_eta", n, [n] {
      std::vector<LawInstance> parts;
      for (const FnTable& f : functions_between_carriers(n))
        parts.push_back(law_f_slide_eta(f));
      return aggregate("f_slide_eta", Json{{"size", n}}, kExists, parts);
    }});
    jobs.push_back({"eta_product", n, [n] {
      std::vector<LawInstance> parts;
      for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; b <= n; ++b) {
          if (std::max(a, b) != n || a * b > 6) continue;
          parts.push_back(law_eta_product(FiniteSet::range("X", a),
                                          FiniteSet::range("Y", b)));
        }
      }
      return aggregate("eta_product", Json{{"size", n}}, kIso, parts);
    }});
    jobs.push_back({"snake_not_identity", n, [x] { return law_snake_not_identity(x); }});
    jobs.push_back({"sim_snake", n, [x] { return law_sim_snake(x); }});
    for (Side side : {Side::covariant, Side::contravariant}) {
      const std::string id = side == Side::covariant ? "white_slide_covariant"
                                                     : "white_slide_contravariant";
      jobs.push_back({id, n, [x, n, side, id, samples] {
        const Boundary ends = side == Side::covariant ? plus(x) : minus(x);
        std::vector<LawInstance> parts;
        parts.push_back(law_white_slide(identity(ends), side));
        for (const FnTable& f : enumerate_functions(x, x)) {
          parts.push_back(law_white_slide(
              side == Side::covariant ? lift_forward(f) : lift_backward(f), side));
        }
        for (std::size_t i = 0; i < 2 * samples; ++i) {
          const std::uint64_t seed = 1000 * n + i;
          parts.push_back(law_white_slide(
              random_table_game(ends, ends, 1 + seed % 4, seed), side));
        }
        return aggregate(id, Json{{"size", n}}, kExists, parts);
      }});
    }
    jobs.push_back({"white_unit", n, [x] { return law_white_unit(x); }});
    jobs.push_back({"white_assoc", n, [x] { return law_white_assoc(x); }});
    jobs.push_back({"white_comm", n, [x] { return law_white_comm(x); }});
    jobs.push_back({"bialgebra", n, [x] { return law_bialgebra(x); }});
    for (MonoidalLaw law :
         {MonoidalLaw::assoc_seq, MonoidalLaw::assoc_tensor, MonoidalLaw::unit,
          MonoidalLaw::interchange, MonoidalLaw::symmetry}) {
      jobs.push_back({monoidal_id(law), n, [law, n, samples] {
        return law_monoidal(law, n, samples, 7919 * n + static_cast<int>(law));
      }});
    }
  }
  return jobs;
}

}  // namespace

std::vector<std::string> law_ids() {
  std::vector<std::string> ids;
  for (const SuiteJob& j : suite_jobs({1}, 0)) ids.push_back(j.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<LawInstance> run_suite(const SuiteOptions& options) {
  std::vector<SuiteJob> jobs;
  for (SuiteJob& j : suite_jobs(options.sizes, options.samples)) {
    if (j.id.find(options.filter) != std::string::npos) jobs.push_back(std::move(j));
  }
  std::vector<LawInstance> records(jobs.size());
  parallel_for(jobs.size(), options.threads, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    records[i] = jobs[i].run();
    records[i].parameters["size"] = jobs[i].size;
    if (options.timings) {
      records[i].elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    }
  });
  std::stable_sort(records.begin(), records.end(),
                   [](const LawInstance& a, const LawInstance& b) {
                     if (a.law_id != b.law_id) return a.law_id < b.law_id;
                     return a.parameters.dump() < b.parameters.dump();
                   });
  return records;
}

Json to_json(const LawInstance& r, bool timings) {
  Json out;
  out["check_id"] = r.law_id;
  out["parameters"] = r.parameters;
  out["status"] = to_string(r.status);
  out["witness"] = Json{{"expected", r.expected},
                        {"observed", r.observed},
                        {"details", r.details}};
  out["elapsed_ms"] = timings && r.elapsed_ms ? Json(*r.elapsed_ms) : Json();
  return out;
}

Json make_report(const std::vector<LawInstance>& records,
                 const std::vector<std::size_t>& sizes, bool timings) {
  Json report;
  report["tool_version"] = OPENGAMES_VERSION;
  report["configuration"] = Json{{"size_cap", size_cap()}, {"sizes", sizes}};
  report["records"] = Json::array();
  for (const LawInstance& r : records) report["records"].push_back(to_json(r, timings));
  return report;
}

}  // namespace og
