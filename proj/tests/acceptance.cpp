// Acceptance run: one PASS/FAIL line per criterion, each under its time
// bound. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "opengames/dsl/parser.hpp"
#include "opengames/dsl/program.hpp"
#include "opengames/generators.hpp"
#include "opengames/laws.hpp"
#include "opengames/search.hpp"
#include "opengames/two_cells.hpp"

using namespace og;

namespace {

struct Outcome {
  bool ok = false;
  std::string note;
};

FiniteSet sized(std::size_t n) { return FiniteSet::range("X", n); }

Boundary plus(const FiniteSet& x) { return Boundary::covariant(x); }
Boundary minus(const FiniteSet& x) { return Boundary::contravariant(x); }

// Every alpha tried one by one, independent of the compatible-set search.
std::size_t brute_force_count(const OpenGame& g, const OpenGame& h) {
  std::size_t n = 0;
  for_each_function(g.strategies(), h.strategies(), [&](const FnTable& alpha) {
    if (check_morphism({g, h, alpha}).pass) ++n;
  });
  return n;
}

Outcome coordination_diagonal() {
  for (std::size_t n : {2, 3, 4}) {
    const OpenGame g = coordination(sized(n));
    const auto contexts = all_contexts(g);
    if (contexts.size() != 1 || g.strategies().size() != n * n) {
      return {false, "unexpected shape at |X|=" + std::to_string(n)};
    }
    const SubsetTable eq = nash(g, contexts[0]);
    if (eq.count() != n) return {false, std::to_string(eq.count()) + " equilibria"};
    for (std::size_t s : eq.indices()) {
      const auto leaves = non_unit_leaves(g.strategies().element(s));
      if (leaves.size() != 2 || leaves[0] != leaves[1]) {
        return {false, "off-diagonal " + g.strategies().element(s).to_string()};
      }
    }
  }
  return {true, "|X| equilibria of |X|^2, all diagonal, |X| = 2, 3, 4"};
}

Outcome eta_unit() {
  const OpenGame e = eta(FiniteSet::unit());
  const OpenGame id = identity(Boundary());
  const bool found = find_iso(e, id).has_value();
  const bool law = law_eta_unit().status == Status::pass;
  return {found && law, found ? "iso found" : "no iso"};
}

Outcome eta_product() {
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}}) {
    const LawInstance r = law_eta_product(sized(a), FiniteSet::range("Y", b));
    if (r.status != Status::pass) {
      return {false, r.observed + " at " + std::to_string(a) + "x" + std::to_string(b)};
    }
  }
  return {true, "iso at (2,2) and (2,3)"};
}

Outcome loop_collapse() {
  const OpenGame id = identity(Boundary());
  for (std::size_t n : {2, 3}) {
    const OpenGame l = loop(sized(n));
    const std::size_t fwd = brute_force_count(l, id);
    const std::size_t rev = brute_force_count(id, l);
    if (fwd != 1 || rev != n || count_morphisms(l, id) != 1 ||
        count_morphisms(id, l) != n || law_loop_collapse(sized(n)).status != Status::pass) {
      return {false, "counts " + std::to_string(fwd) + "/" + std::to_string(rev) +
                         " at |X|=" + std::to_string(n)};
    }
  }
  return {true, "forward 1, reverse |X| at |X| = 2, 3"};
}

Outcome non_compact_closure() {
  for (std::size_t n : {2, 3}) {
    const FiniteSet x = sized(n);
    const OpenGame r = snake(SnakeKind::right, x, SnakeForm::normal);
    const OpenGame l = snake(SnakeKind::left, x, SnakeForm::normal);
    const OpenGame ip = identity(plus(x));
    const OpenGame im = identity(minus(x));
    const bool empty = find_morphisms(r, ip).empty() && find_morphisms(ip, r).empty() &&
                       find_morphisms(l, im).empty() && find_morphisms(im, l).empty();
    const bool brute = brute_force_count(r, ip) == 0 && brute_force_count(ip, r) == 0 &&
                       brute_force_count(l, im) == 0 && brute_force_count(im, l) == 0;
    if (!empty || !brute) return {false, "a morphism exists at |X|=" + std::to_string(n)};
  }
  const FiniteSet one = sized(1);
  const bool iso =
      find_iso(snake(SnakeKind::right, one, SnakeForm::normal), identity(plus(one))) &&
      find_iso(snake(SnakeKind::left, one, SnakeForm::normal), identity(minus(one)));
  return {iso, iso ? "none at |X| = 2, 3; iso at |X| = 1" : "no iso at |X| = 1"};
}

Outcome sim_facts() {
  for (std::size_t n : {1, 2, 3}) {
    const FiniteSet x = sized(n);
    if (!sim_check(snake(SnakeKind::right, x, SnakeForm::normal), identity(plus(x))).pass ||
        !sim_check(snake(SnakeKind::left, x, SnakeForm::normal), identity(minus(x))).pass) {
      return {false, "snake not ~ identity at |X|=" + std::to_string(n)};
    }
  }
  TermLimits limits;
  limits.max_strategies = 8;
  const auto terms = enumerate_terms(1, 2, limits);
  std::mt19937_64 rng(20240601);
  std::size_t related = 0;
  for (int i = 0; i < 50; ++i) {
    const Term& a = terms[rng() % terms.size()];
    if (!sim_check(a.game, a.game).pass) return {false, "not reflexive on " + a.text};
    // Partner with the same boundaries, so both directions are well typed.
    std::vector<const Term*> partners;
    for (const Term& t : terms) {
      if (t.game.dom() == a.game.dom() && t.game.cod() == a.game.cod()) partners.push_back(&t);
    }
    const Term& b = *partners[rng() % partners.size()];
    const bool ab = sim_check(a.game, b.game).pass;
    if (ab != sim_check(b.game, a.game).pass) {
      return {false, "not symmetric on " + a.text + " / " + b.text};
    }
    related += ab ? 1 : 0;
  }
  return {true, "snakes ~ identities for |X| <= 3; 50 samples reflexive and symmetric (" +
                    std::to_string(related) + " related pairs)"};
}

Outcome f_slides() {
  const FiniteSet carriers[] = {sized(2), FiniteSet::range("Y", 2)};
  std::size_t n = 0;
  for (const FiniteSet& a : carriers) {
    for (const FiniteSet& b : carriers) {
      for (const FnTable& f : enumerate_functions(a, b)) {
        if (law_f_slide_counit(f).status != Status::pass) return {false, "counit slide " + f.to_string()};
        if (law_f_slide_eta(f).status != Status::pass) return {false, "eta slide " + f.to_string()};
        ++n;
      }
    }
  }
  return {n == 16, std::to_string(n) + " functions"};
}

Outcome white_slides() {
  const FiniteSet x = sized(2);
  std::size_t n = 0;
  for (Side side : {Side::covariant, Side::contravariant}) {
    const Boundary ends = side == Side::covariant ? plus(x) : minus(x);
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::uint64_t seed = 777000 + i;
      const OpenGame g = random_table_game(ends, ends, 1 + i % 4, seed);
      if (law_white_slide(g, side).status != Status::pass) {
        return {false, "seed " + std::to_string(seed) + " fails"};
      }
      ++n;
    }
  }
  return {n == 200, "100 random games per side, |Sigma| = 1..4"};
}

Outcome per_size(const std::function<LawInstance(const FiniteSet&)>& law,
                 std::initializer_list<std::size_t> sizes) {
  for (std::size_t n : sizes) {
    const LawInstance r = law(sized(n));
    if (r.status != Status::pass) return {false, r.observed + " at |X|=" + std::to_string(n)};
  }
  return {true, "pass"};
}

Outcome white_units() { return per_size(law_white_unit, {2, 3}); }

Outcome white_assoc_comm() {
  const Outcome a = per_size(law_white_assoc, {1, 2, 3});
  if (!a.ok) return {false, "assoc: " + a.note};
  const Outcome c = per_size(law_white_comm, {1, 2, 3});
  return {c.ok, c.ok ? "pass" : "comm: " + c.note};
}

Outcome bialgebra() { return per_size(law_bialgebra, {1, 2, 3}); }

Outcome monoidal() {
  int i = 0;
  for (MonoidalLaw law : {MonoidalLaw::assoc_seq, MonoidalLaw::assoc_tensor,
                          MonoidalLaw::unit, MonoidalLaw::interchange,
                          MonoidalLaw::symmetry}) {
    const LawInstance r = law_monoidal(law, 2, 50, 4242 + i++);
    if (r.status != Status::pass) return {false, r.law_id + ": " + r.observed};
  }
  return {true, "5 laws x 50 samples"};
}

Outcome corpus() {
  std::size_t files = 0, games = 0;
  for (const auto& e : std::filesystem::directory_iterator(OG_CORPUS_DIR)) {
    if (e.path().extension() != ".og") continue;
    std::ifstream in(e.path());
    std::stringstream s;
    s << in.rdbuf();
    const std::string text = s.str();
    const dsl::Program p = dsl::parse(text);
    if (!(dsl::parse(dsl::pretty_print(p)) == p)) {
      return {false, e.path().filename().string() + " does not round-trip"};
    }
    const dsl::TypedProgram t = dsl::typecheck(p);
    const auto notes = dsl::boundary_annotations(text);
    if (notes.size() != t.games().size()) {
      return {false, e.path().filename().string() + " has unannotated games"};
    }
    for (const dsl::BoundaryAnnotation& a : notes) {
      const OpenGame g = dsl::elaborate(t, a.game);
      if (g.dom().to_string() != a.dom || g.cod().to_string() != a.cod) {
        return {false, a.game + " is " + g.dom().to_string() + " -> " + g.cod().to_string()};
      }
      ++games;
    }
    ++files;
  }
  return {files >= 10, std::to_string(files) + " files, " + std::to_string(games) + " games"};
}

Outcome full_suite() {
  SuiteOptions options;
  options.sizes = {1, 2, 3};
  const auto first = run_suite(options);
  const auto second = run_suite(options);
  const std::string a = make_report(first, options.sizes, false).dump(2);
  const std::string b = make_report(second, options.sizes, false).dump(2);
  std::size_t unexpected = 0;
  for (const LawInstance& r : first) unexpected += r.status == Status::fail ? 1 : 0;
  return {unexpected == 0 && a == b,
          std::to_string(first.size()) + " records, " + std::to_string(unexpected) +
              " unexpected, reports " + (a == b ? "identical" : "differ")};
}

std::string describe(const SimSearchResult& r) {
  if (!r.counterexample) return "exhausted at depth " + std::to_string(r.depth_reached);
  const SimCounterexample& c = *r.counterexample;
  return c.g.text + " | " + c.g2.text + " | " + c.h.text + " | " + c.h2.text;
}

Outcome sim_search() {
  const SimSearchResult a = sim_compositionality_search(3, 2);
  const SimSearchResult b = sim_compositionality_search(3, 2);
  const bool same = describe(a) == describe(b);
  const bool verified = !a.counterexample || a.counterexample->verified;
  return {same && verified,
          (a.counterexample ? "counterexample at depth " + std::to_string(a.depth_reached) +
                                  (verified ? " (re-verified)" : " (NOT verified)")
                            : describe(a)) +
              (same ? "" : "; outcome differs between runs")};
}

struct Criterion {
  int number;
  const char* name;
  double bound_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "coordination game equilibria are the diagonal", 1, coordination_diagonal},
      {2, "eta over 1 is iso to id_I", 1, eta_unit},
      {3, "eta of a product is iso to the tensor of etas", 10, eta_product},
      {4, "loop collapse morphism counts", 5, loop_collapse},
      {5, "snakes have no morphisms to or from identities", 5, non_compact_closure},
      {6, "~ facts: snakes ~ identities, reflexive, symmetric", 30, sim_facts},
      {7, "f-sliding over 16 functions", 10, f_slides},
      {8, "white-node slides on 100 random games", 60, white_slides},
      {9, "white unit laws", 10, white_units},
      {10, "white associativity and commutativity", 30, white_assoc_comm},
      {11, "eight lax-bialgebra 2-cells", 60, bialgebra},
      {12, "instance-level monoidal laws on 50 samples", 120, monoidal},
      {13, "golden corpus", 5, corpus},
      {14, "full law suite at sizes 1..3, deterministic", 300, full_suite},
      {15, "~-compositionality search, depth 3, size 2", 600, sim_search},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && s < c.bound_s;
    if (!pass) ++failed;
    std::printf("%s %2d %s [%.3fs / %.0fs] %s\n", pass ? "PASS" : "FAIL", c.number, c.name,
                s, c.bound_s, o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 15 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
