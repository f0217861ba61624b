#include "opengames/dsl/ast.hpp"

#include <map>

namespace og::dsl {

namespace {

const std::map<std::string, std::vector<ArgKind>>& signatures() {
  using enum ArgKind;
  static const std::map<std::string, std::vector<ArgKind>> table = {
      {"id", {object}},        {"sym", {object, object}},
      {"counit", {set}},       {"eta", {set}},
      {"liftF", {fun}},        {"liftB", {fun}},
      {"copyF", {set}},        {"delF", {set}},
      {"copyB", {set}},        {"delB", {set}},
      {"mergeF", {set}},       {"spawnF", {set}},
      {"mergeB", {set}},       {"spawnB", {set}},
      {"triR", {set}},         {"triL", {set}},
      {"agent", {selection, set, set, set}},
  };
  return table;
}

bool same_ptr(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

}  // namespace

std::optional<std::vector<ArgKind>> atom_signature(const std::string& kind) {
  const auto it = signatures().find(kind);
  if (it == signatures().end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& atom_kinds() {
  static const std::vector<std::string> kinds = {
      "id",     "sym",   "counit", "eta",    "liftF",  "liftB",
      "copyF",  "delF",  "copyB",  "delB",   "mergeF", "spawnF",
      "mergeB", "spawnB", "triR",  "triL",   "agent"};
  return kinds;
}

bool operator==(const WireRef& a, const WireRef& b) {
  return a.set == b.set && a.polarity == b.polarity;
}

bool operator==(const ObjectExpr& a, const ObjectExpr& b) {
  return a.wires == b.wires;
}

bool operator==(const Selection& a, const Selection& b) {
  return a.kind == b.kind && a.element == b.element;
}

bool operator==(const Arg& a, const Arg& b) { return a.value == b.value; }

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args &&
         same_ptr(a.left, b.left) && same_ptr(a.right, b.right);
}

bool operator==(const SetDecl& a, const SetDecl& b) {
  return a.name == b.name && a.elements == b.elements;
}

bool operator==(const FunDecl& a, const FunDecl& b) {
  return a.name == b.name && a.domain == b.domain &&
         a.codomain == b.codomain && a.pairs == b.pairs;
}

bool operator==(const GameDecl& a, const GameDecl& b) {
  return a.name == b.name && same_ptr(a.body, b.body);
}

bool operator==(const Program& a, const Program& b) {
  return a.decls == b.decls;
}

}  // namespace og::dsl
