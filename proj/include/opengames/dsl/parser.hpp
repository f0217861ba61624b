#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opengames/dsl/ast.hpp"

namespace og::dsl {

enum class TokenKind {
  identifier,
  kw_set,
  kw_fun,
  kw_game,
  equals,
  colon,
  semicolon,
  comma,
  arrow,
  seq,
  star,
  plus,
  minus,
  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  end
};

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  SourceLocation where;
};

/// Human-readable token description, e.g. `'>>'` or `identifier`.
std::string describe(TokenKind kind);

/// Throws LexError at the first unrecognized character.
std::vector<Token> tokenize(std::string_view text);

/// Throws LexError or ParseError with the offending location.
Program parse(std::string_view text);

}  // namespace og::dsl
