#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "opengames/dsl/ast.hpp"
#include "opengames/fn_table.hpp"
#include "opengames/open_game.hpp"

namespace og::dsl {

struct TypedGame {
  std::string name;
  Boundary dom;
  Boundary cod;
  SourceLocation where;
};

/// A program whose declarations resolved and whose games typechecked.
class TypedProgram {
 public:
  const Program& program() const { return program_; }
  const std::vector<TypedGame>& games() const { return games_; }
  const TypedGame& game(const std::string& name) const;
  const FiniteSet& set(const std::string& name) const;
  const FnTable& fun(const std::string& name) const;
  const Expr& body(const std::string& name) const;

 private:
  friend TypedProgram typecheck(Program program);

  Program program_;
  std::map<std::string, FiniteSet> sets_;
  std::map<std::string, FnTable> funs_;
  std::map<std::string, ExprPtr> bodies_;
  std::map<std::string, std::size_t> game_index_;
  std::vector<TypedGame> games_;
};

/// Resolves names and infers the boundary of every game. Throws
/// TypeMismatch (naming both boundaries and the junction) or UnknownName.
TypedProgram typecheck(Program program);

/// Builds the open game named `name`. Throws UnknownName.
OpenGame elaborate(const TypedProgram& program, const std::string& name);

/// Canonical text: one declaration per line, single spaces, minimal
/// parentheses.
std::string pretty_print(const Program& program);
std::string pretty_print(const Expr& expr);

/// An expected boundary written in a comment:
///   // boundary: NAME : [B+, B-] -> []
struct BoundaryAnnotation {
  std::string game;
  std::string dom;
  std::string cod;
  std::size_t line = 0;
};

std::vector<BoundaryAnnotation> boundary_annotations(std::string_view text);

}  // namespace og::dsl
