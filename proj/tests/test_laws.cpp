#include <doctest.h>

#include <set>

#include "opengames/generators.hpp"
#include "opengames/laws.hpp"

using namespace og;

namespace {

FiniteSet sized(std::size_t n) { return FiniteSet::range("X", n); }

std::size_t count_with_id(const std::vector<LawInstance>& records,
                          const std::string& needle) {
  std::size_t n = 0;
  for (const LawInstance& r : records) n += r.law_id.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST_CASE("suite at sizes 1..3 matches every expectation") {
  SuiteOptions o;
  o.sizes = {1, 2, 3};
  const auto records = run_suite(o);
  CHECK_FALSE(records.empty());
  for (const LawInstance& r : records) {
    INFO(r.law_id << " " << r.parameters.dump() << " " << r.details.dump());
    CHECK(r.status == Status::pass);
    CHECK(r.observed == r.expected);
  }
}

TEST_CASE("empty size list gives an empty report") {
  CHECK(run_suite(SuiteOptions{}).empty());
}

TEST_CASE("size zero is flagged vacuous") {
  SuiteOptions o;
  o.sizes = {0};
  const auto records = run_suite(o);
  REQUIRE(records.size() == 1);
  CHECK(records[0].law_id == "loop_collapse");
  CHECK(records[0].status == Status::vacuous);
  CHECK(records[0].details["reverse_count"] == 0);
}

TEST_CASE("snake filter yields two laws per size") {
  SuiteOptions o;
  o.sizes = {1, 2, 3};
  o.filter = "snake";
  const auto records = run_suite(o);
  CHECK(records.size() == 6);
  CHECK(count_with_id(records, "snake") == 6);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  SuiteOptions o;
  o.sizes = {1, 2};
  const std::string a = make_report(run_suite(o), o.sizes, false).dump(2);
  o.threads = 4;
  const std::string b = make_report(run_suite(o), o.sizes, false).dump(2);
  CHECK(a == b);
}

TEST_CASE("report fields") {
  SuiteOptions o;
  o.sizes = {1};
  o.filter = "white_unit";
  const Json report = make_report(run_suite(o), o.sizes, false);
  CHECK(report["configuration"]["sizes"] == Json::array({1}));
  REQUIRE(report["records"].size() == 1);
  const Json& rec = report["records"][0];
  CHECK(rec["check_id"] == "white_unit");
  CHECK(rec["status"] == "pass");
  CHECK(rec["elapsed_ms"].is_null());
  CHECK(rec["witness"]["expected"] == "iso");
  std::vector<std::string> keys;
  for (const auto& [k, v] : rec.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check_id", "parameters", "status",
                                         "witness", "elapsed_ms"});
}

TEST_CASE("law ids are unique and sorted") {
  const auto ids = law_ids();
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("f-slide laws over the sixteen functions between two-element sets") {
  const FiniteSet carriers[] = {FiniteSet::range("X", 2), FiniteSet::range("Y", 2)};
  std::size_t n = 0;
  for (const FiniteSet& a : carriers) {
    for (const FiniteSet& b : carriers) {
      for (const FnTable& f : enumerate_functions(a, b)) {
        CHECK(law_f_slide_counit(f).status == Status::pass);
        CHECK(law_f_slide_eta(f).status == Status::pass);
        ++n;
      }
    }
  }
  CHECK(n == 16);
}

TEST_CASE("eta-slide alpha is not reversible for non-injective f") {
  const FiniteSet x = sized(2);
  const FiniteSet y = FiniteSet::range("Y", 1);
  const FnTable f(x, y, {0, 0});
  const OpenGame lhs =
      compose(eta(x), tensor(lift_forward(f), identity(Boundary::contravariant(x))));
  const OpenGame rhs =
      compose(eta(y), tensor(identity(Boundary::covariant(y)), lift_backward(f)));
  CHECK(count_morphisms(lhs, rhs) > 0);
  CHECK_FALSE(find_iso(lhs, rhs));
}

TEST_CASE("bialgebra cells are lax: reversed cells fail above size one") {
  const FiniteSet x = sized(2);
  const OpenGame del_b = black(BlackKind::delete_backward, x);
  const OpenGame merge_b = white(WhiteKind::merge_backward, x);
  const OpenGame lhs = compose(del_b, merge_b);
  const OpenGame rhs = tensor(del_b, del_b);
  CHECK(count_morphisms(lhs, rhs) == 1);
  CHECK(count_morphisms(rhs, lhs) == 0);

  const OpenGame merge_f = white(WhiteKind::merge_forward, x);
  const OpenGame del_f = black(BlackKind::delete_forward, x);
  CHECK(count_morphisms(tensor(del_f, del_f), compose(merge_f, del_f)) == 0);
}

TEST_CASE("white-unit reverse maps must keep the merge strategy") {
  const FiniteSet x = sized(2);
  const OpenGame right = snake(SnakeKind::right, x, SnakeForm::normal);
  const OpenGame unit =
      compose(tensor(identity(Boundary::covariant(x)),
                     white(WhiteKind::spawn_forward, x)),
              white(WhiteKind::merge_forward, x));
  const FnTable keep_spawn = relabel_by_leaves(
      unit.strategies(), right.strategies(),
      [](const std::vector<Value>& v) { return std::vector<Value>{v.at(0)}; });
  const auto v = check_morphism({unit, right, keep_spawn});
  CHECK_FALSE(v.pass);
  REQUIRE(v.failure);
  CHECK(v.failure->condition == MorphismCondition::play);
}

TEST_CASE("white slide holds for lifted functions and random tables") {
  const FiniteSet x = sized(2);
  for (const FnTable& f : enumerate_functions(x, x)) {
    CHECK(law_white_slide(lift_forward(f), Side::covariant).status == Status::pass);
    CHECK(law_white_slide(lift_backward(f), Side::contravariant).status == Status::pass);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const OpenGame g = random_table_game(Boundary::covariant(x),
                                         Boundary::covariant(x), 1 + seed % 4, seed);
    CHECK(law_white_slide(g, Side::covariant).status == Status::pass);
    const OpenGame h = random_table_game(Boundary::contravariant(x),
                                         Boundary::contravariant(x), 1 + seed % 4, seed);
    CHECK(law_white_slide(h, Side::contravariant).status == Status::pass);
  }
}

TEST_CASE("white slide alpha is specific") {
  // Sending every (x, sigma) to a fixed output breaks play for a non-constant
  // game.
  const FiniteSet x = sized(2);
  const OpenGame g = lift_forward(identity_fn(x));
  const OpenGame lhs = compose(snake(SnakeKind::right, x, SnakeForm::normal), g);
  const OpenGame rhs = compose(g, snake(SnakeKind::right, x, SnakeForm::normal));
  const FnTable constant(lhs.strategies(), rhs.strategies(), {0, 0});
  CHECK_FALSE(check_morphism({lhs, rhs, constant}).pass);
}

TEST_CASE("random table games are reproducible") {
  const Boundary b = Boundary::covariant(sized(2));
  const OpenGame g1 = random_table_game(b, b, 3, 42);
  const OpenGame g2 = random_table_game(b, b, 3, 42);
  CHECK(g1.play_table() == g2.play_table());
  for (const Context& c : all_contexts(g1)) CHECK(nash(g1, c) == nash(g2, c));
}

TEST_CASE("monoidal laws hold on sampled terms") {
  for (MonoidalLaw law : {MonoidalLaw::assoc_seq, MonoidalLaw::assoc_tensor,
                          MonoidalLaw::unit, MonoidalLaw::interchange,
                          MonoidalLaw::symmetry}) {
    const LawInstance r = law_monoidal(law, 2, 50, 99);
    INFO(r.law_id << " " << r.details.dump());
    CHECK(r.status == Status::pass);
    CHECK(r.details["instances"] == 50);
  }
}
