#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "opengames/dsl/parser.hpp"
#include "opengames/dsl/program.hpp"
#include "opengames/errors.hpp"
#include "opengames/generators.hpp"
#include "opengames/two_cells.hpp"

using namespace og;
using namespace og::dsl;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(OG_CORPUS_DIR)) {
    if (e.path().extension() == ".og") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypedProgram load(std::string_view text) { return typecheck(parse(text)); }

template <class E>
SourceLocation location_of(std::string_view text) {
  try {
    load(text);
  } catch (const E& e) {
    return e.where();
  }
  FAIL("no error raised");
  return {};
}

bool same_game_tables(const OpenGame& a, const OpenGame& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) return false;
  if (!(a.play_table() == b.play_table()) || !(a.coplay_table() == b.coplay_table())) {
    return false;
  }
  for (const Context& c : all_contexts(a)) {
    if (!(nash(a, c) == nash(b, c))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse the grammar examples") {
  const Program p = parse("set B = {0, 1}; game G = eta(B) >> counit(B);");
  REQUIRE(p.decls.size() == 2);
  const auto& g = std::get<GameDecl>(p.decls[1]);
  CHECK(g.body->kind == Expr::Kind::seq);
  CHECK(g.body->left->name == "eta");

  const Program q = parse("game H = id([B+]) * id([B-]);");
  CHECK(std::get<GameDecl>(q.decls[0]).body->kind == Expr::Kind::par);
}

TEST_CASE("tensor binds tighter than sequence, both left-associative") {
  const Program p = parse("game G = id([]) >> id([]) * id([]) * id([]) >> id([]);");
  const Expr& e = *std::get<GameDecl>(p.decls[0]).body;
  REQUIRE(e.kind == Expr::Kind::seq);
  CHECK(e.left->kind == Expr::Kind::seq);
  const Expr& t = *e.left->right;
  REQUIRE(t.kind == Expr::Kind::par);
  CHECK(t.left->kind == Expr::Kind::par);
  CHECK(t.right->kind == Expr::Kind::atom);
}

TEST_CASE("parse errors carry line, column and the expected set") {
  try {
    parse("set B = {0, 1;\ngame G = eta(B);");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.where().line == 1);
    CHECK(e.where().column == 14);
    CHECK(e.expected() == std::vector<std::string>{"','", "'}'"});
  }
  try {
    parse("set B = {0};\ngame G = eta(B) >>\n  ;");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.where().line == 3);
    CHECK(e.where().column == 3);
  }
  try {
    parse("game G = wibble(B);");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.where().column == 10);
    CHECK(e.expected() == atom_kinds());
  }
  CHECK_THROWS_AS(parse("game G = id([B*]);"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("game G = agent(best, 1, B, B);"), ParseError);
}

TEST_CASE("lex errors") {
  try {
    parse("set B = {0};\n  game G = eta(B) > counit(B);");
    FAIL("accepted");
  } catch (const LexError& e) {
    CHECK(e.where().line == 2);
    CHECK(e.where().column == 19);
  }
  CHECK_THROWS_AS(parse("set B = {0, 1} @"), LexError);
}

TEST_CASE("comments and whitespace are ignored") {
  const Program a = parse("set B = {0,1};game G=eta(B)>>counit(B);");
  const Program b = parse("# one\nset B = { 0 , 1 } ; // two\n\n game G =\n eta(B)\n >> counit(B) ;");
  CHECK(a == b);
}

TEST_CASE("typecheck boundaries") {
  const TypedProgram t = load(
      "set B = {0, 1}; set C = {a, b, c};"
      "fun f : B -> C = {0 -> a, 1 -> c};"
      "game loop = eta(B) >> counit(B);"
      "game lf = liftF(f);"
      "game lb = liftB(f);"
      "game ag = agent(argmax, B, C, B);");
  CHECK(t.game("loop").dom.to_string() == "[]");
  CHECK(t.game("loop").cod.to_string() == "[]");
  CHECK(t.game("lf").dom.to_string() == "[B+]");
  CHECK(t.game("lf").cod.to_string() == "[C+]");
  CHECK(t.game("lb").dom.to_string() == "[C-]");
  CHECK(t.game("lb").cod.to_string() == "[B-]");
  CHECK(t.game("ag").dom.to_string() == "[B+]");
  CHECK(t.game("ag").cod.to_string() == "[C+, B-]");
}

TEST_CASE("a mismatched junction names both boundaries and its location") {
  const std::string text = "set B = {0, 1};\ngame bad = eta(B) >> eta(B);";
  try {
    load(text);
    FAIL("accepted");
  } catch (const TypeMismatch& e) {
    const std::string what = e.what();
    CHECK(what.find("2:19") == 0);
    CHECK(what.find("[]") != std::string::npos);
    CHECK(what.find("[B+, B-]") != std::string::npos);
  }
}

TEST_CASE("counit then eta is well typed") {
  const TypedProgram t = load("set B = {0, 1}; game g = counit(B) >> eta(B);");
  CHECK(t.game("g").dom.to_string() == "[B+, B-]");
  CHECK(t.game("g").cod.to_string() == "[B+, B-]");
}

TEST_CASE("seq needs an exact wire list, not just equal sets") {
  CHECK_THROWS_AS(load("set B = {0,1}; game g = eta(B) >> sym([B+],[B-]) >> counit(B);"),
                  TypeMismatch);
  CHECK_NOTHROW(load("set B = {0,1}; game g = eta(B) >> sym([B+],[B-]) >> sym([B-],[B+]) >> counit(B);"));
}

TEST_CASE("name resolution errors") {
  CHECK_THROWS_AS(load("game g = eta(B);"), UnknownName);
  CHECK_THROWS_AS(load("set B = {0}; game g = liftF(f);"), UnknownName);
  CHECK_THROWS_AS(load("set B = {0}; game g = h;"), UnknownName);
  CHECK_THROWS_AS(load("set B = {0}; game g = g;"), UnknownName);
  CHECK_THROWS_AS(load("set B = {0}; game g = id([C+]);"), UnknownName);
  CHECK_THROWS_AS(load("set B = {0}; set B = {1};"), TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0, 0};"), TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0}; game g = eta(B); game g = eta(B);"), TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0, 1}; fun f : B -> B = {0 -> 1};"), TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0, 1}; fun f : B -> B = {0 -> 1, 0 -> 0, 1 -> 1};"),
                  TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0, 1}; fun f : B -> B = {0 -> 2, 1 -> 1};"), TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0, 1}; set C = {a}; game g = agent(fix, 1, B, C);"),
                  TypeMismatch);
  CHECK_THROWS_AS(load("set B = {0, 1}; game g = agent(const(7), 1, B, B);"), TypeMismatch);
  CHECK_NOTHROW(load("set B = {0, 1}; game g = agent(const(1), 1, B, B);"));
}

TEST_CASE("elaboration matches the generators") {
  const TypedProgram t = load(
      "set B = {0, 1};"
      "game loop = eta(B) >> counit(B);"
      "game empty = id([]);"
      "game r = triR(B);"
      "game l = triL(B);"
      "game guess = agent(fix, 1, B, B);");
  const FiniteSet b = t.set("B");
  CHECK(same_game_tables(elaborate(t, "loop"), loop(b)));
  CHECK(same_game_tables(elaborate(t, "empty"), identity(Boundary())));
  CHECK(same_game_tables(elaborate(t, "r"), snake(SnakeKind::right, b, SnakeForm::normal)));
  CHECK(same_game_tables(elaborate(t, "l"), snake(SnakeKind::left, b, SnakeForm::normal)));
  // Strategies are tables 1 -> B rather than B itself.
  CHECK(find_iso(elaborate(t, "guess"), eta(b)).has_value());
  CHECK_THROWS_AS(elaborate(t, "missing"), UnknownName);
}

TEST_CASE("elaboration is compositional") {
  const TypedProgram t = load(
      "set B = {0, 1};"
      "game a = agent(argmax, B, B, B);"
      "game b = triR(B) * id([B-]);"
      "game s = a >> b;"
      "game p = a * b;"
      "game s2 = agent(argmax, B, B, B) >> triR(B) * id([B-]);");
  const OpenGame a = elaborate(t, "a");
  const OpenGame b = elaborate(t, "b");
  CHECK(same_game_tables(elaborate(t, "s"), compose(a, b)));
  CHECK(same_game_tables(elaborate(t, "p"), tensor(a, b)));
  CHECK(same_game_tables(elaborate(t, "s2"), compose(a, b)));
}

TEST_CASE("coordination program has the diagonal equilibria") {
  const TypedProgram t = load(slurp(std::filesystem::path(OG_CORPUS_DIR) / "coordination.og"));
  const OpenGame g = elaborate(t, "coord");
  const auto contexts = all_contexts(g);
  REQUIRE(contexts.size() == 1);
  const SubsetTable eq = nash(g, contexts[0]);
  std::vector<std::size_t> found;
  for (std::size_t s = 0; s < g.strategies().size(); ++s) {
    if (eq.contains(s)) found.push_back(s);
  }
  REQUIRE(found.size() == 2);
  for (std::size_t s : found) {
    const Value v = g.strategies().element(s);
    // Sigma is ((a, b)), possibly with starred lens factors; compare the leaves.
    const auto leaves = non_unit_leaves(v);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0] == leaves[1]);
  }
  CHECK(same_game_tables(g, coordination(t.set("B"))));
}

TEST_CASE("normal snakes are isomorphic to their built forms") {
  const TypedProgram t = load(slurp(std::filesystem::path(OG_CORPUS_DIR) / "snakes.og"));
  CHECK(find_iso(elaborate(t, "right"), elaborate(t, "right_built")).has_value());
  CHECK(find_iso(elaborate(t, "left"), elaborate(t, "left_built")).has_value());
}

TEST_CASE("pretty printing") {
  const Program p = parse(
      "set B={0,1};\nfun n:B->B={0->1,1->0};\n"
      "game g = (eta(B)) >> ((counit(B)*eta(B)) >> sym([B+],[B-]));\n"
      "game h = id([]) * (id([]) * id([])) >> agent(const(1), 1, B, B);");
  const std::string text = pretty_print(p);
  CHECK(text ==
        "set B = {0, 1};\n"
        "fun n : B -> B = {0 -> 1, 1 -> 0};\n"
        "game g = eta(B) >> (counit(B) * eta(B) >> sym([B+], [B-]));\n"
        "game h = id([]) * (id([]) * id([])) >> agent(const(1), 1, B, B);\n");
  CHECK(parse(text) == p);
  CHECK(pretty_print(parse(text)) == text);
}

TEST_CASE("golden corpus") {
  const auto files = corpus();
  REQUIRE(files.size() >= 10);
  std::size_t annotated = 0;
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const std::string text = slurp(f);
    const Program p = parse(text);
    CHECK(parse(pretty_print(p)) == p);
    const TypedProgram t = typecheck(p);
    const auto notes = boundary_annotations(text);
    CHECK(notes.size() == t.games().size());
    for (const BoundaryAnnotation& a : notes) {
      CAPTURE(a.game);
      const TypedGame& g = t.game(a.game);
      CHECK(g.dom.to_string() == a.dom);
      CHECK(g.cod.to_string() == a.cod);
      const OpenGame e = elaborate(t, a.game);
      CHECK(e.dom() == g.dom);
      CHECK(e.cod() == g.cod);
      ++annotated;
    }
  }
  CHECK(annotated >= 10);
}

TEST_CASE("sims corpus program is a non-compositionality witness") {
  const TypedProgram t = load(slurp(std::filesystem::path(OG_CORPUS_DIR) / "sims.og"));
  CHECK(sim_check(elaborate(t, "h"), elaborate(t, "h2")).pass);
  CHECK_FALSE(sim_check(elaborate(t, "left"), elaborate(t, "right")).pass);
}
