#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opengames/boundary.hpp"
#include "opengames/errors.hpp"

namespace og::dsl {

struct WireRef {
  std::string set;
  Polarity polarity = Polarity::forward;
  SourceLocation where;
};

/// `[X+, Y-]`; `[]` is I.
struct ObjectExpr {
  std::vector<WireRef> wires;
  SourceLocation where;
};

struct Selection {
  enum class Kind { argmax, fix, constant };
  Kind kind = Kind::argmax;
  std::string element;
};

enum class ArgKind { object, set, fun, selection };

struct Arg {
  std::variant<ObjectExpr, std::string, Selection> value;
  SourceLocation where;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// An atom `kind(args)`, a reference to an earlier game, or a binary node.
struct Expr {
  enum class Kind { atom, ref, seq, par };
  Kind kind = Kind::atom;
  SourceLocation where;
  std::string name;
  std::vector<Arg> args;
  ExprPtr left;
  ExprPtr right;
};

struct SetDecl {
  std::string name;
  std::vector<std::string> elements;
  SourceLocation where;
};

struct FunDecl {
  std::string name;
  std::string domain;
  std::string codomain;
  std::vector<std::pair<std::string, std::string>> pairs;
  SourceLocation where;
};

struct GameDecl {
  std::string name;
  ExprPtr body;
  SourceLocation where;
};

using Declaration = std::variant<SetDecl, FunDecl, GameDecl>;

struct Program {
  std::vector<Declaration> decls;
};

/// Argument signature of an atom kind, or nullopt if `kind` is not an atom.
std::optional<std::vector<ArgKind>> atom_signature(const std::string& kind);
/// All atom kinds in a fixed order.
const std::vector<std::string>& atom_kinds();

// Structural equality, ignoring source locations.
bool operator==(const WireRef& a, const WireRef& b);
bool operator==(const ObjectExpr& a, const ObjectExpr& b);
bool operator==(const Selection& a, const Selection& b);
bool operator==(const Arg& a, const Arg& b);
bool operator==(const Expr& a, const Expr& b);
bool operator==(const SetDecl& a, const SetDecl& b);
bool operator==(const FunDecl& a, const FunDecl& b);
bool operator==(const GameDecl& a, const GameDecl& b);
bool operator==(const Program& a, const Program& b);

}  // namespace og::dsl
