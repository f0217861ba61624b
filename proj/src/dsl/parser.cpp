#include "opengames/dsl/parser.hpp"

#include <cctype>

namespace og::dsl {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program program() {
    Program p;
    do {
      p.decls.push_back(declaration());
    } while (peek().kind != TokenKind::end);
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& peek2() const {
    return tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == TokenKind::end
            ? "end of input"
            : t.kind == TokenKind::identifier ? "identifier '" + t.text + "'"
                                              : "'" + t.text + "'";
    throw ParseError(t.where, found, std::move(expected));
  }

  Token expect(TokenKind kind) {
    if (peek().kind != kind) fail({describe(kind)});
    return tokens_[pos_++];
  }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Declaration declaration() {
    switch (peek().kind) {
      case TokenKind::kw_set: return set_decl();
      case TokenKind::kw_fun: return fun_decl();
      case TokenKind::kw_game: return game_decl();
      default: fail({"'set'", "'fun'", "'game'"});
    }
  }

  SetDecl set_decl() {
    SetDecl d;
    d.where = expect(TokenKind::kw_set).where;
    d.name = expect(TokenKind::identifier).text;
    expect(TokenKind::equals);
    expect(TokenKind::lbrace);
    d.elements.push_back(expect(TokenKind::identifier).text);
    while (!accept(TokenKind::rbrace)) {
      if (peek().kind != TokenKind::comma) fail({"','", "'}'"});
      ++pos_;
      d.elements.push_back(expect(TokenKind::identifier).text);
    }
    expect(TokenKind::semicolon);
    return d;
  }

  FunDecl fun_decl() {
    FunDecl d;
    d.where = expect(TokenKind::kw_fun).where;
    d.name = expect(TokenKind::identifier).text;
    expect(TokenKind::colon);
    d.domain = expect(TokenKind::identifier).text;
    expect(TokenKind::arrow);
    d.codomain = expect(TokenKind::identifier).text;
    expect(TokenKind::equals);
    expect(TokenKind::lbrace);
    auto pair = [&] {
      std::string from = expect(TokenKind::identifier).text;
      expect(TokenKind::arrow);
      d.pairs.emplace_back(std::move(from), expect(TokenKind::identifier).text);
    };
    pair();
    while (!accept(TokenKind::rbrace)) {
      if (peek().kind != TokenKind::comma) fail({"','", "'}'"});
      ++pos_;
      pair();
    }
    expect(TokenKind::semicolon);
    return d;
  }

  GameDecl game_decl() {
    GameDecl d;
    d.where = expect(TokenKind::kw_game).where;
    d.name = expect(TokenKind::identifier).text;
    expect(TokenKind::equals);
    d.body = expr();
    if (peek().kind != TokenKind::semicolon) fail({"'>>'", "'*'", "';'"});
    ++pos_;
    return d;
  }

  ExprPtr binary(Expr::Kind kind, ExprPtr left, ExprPtr right,
                 SourceLocation where) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->where = where;
    e->left = std::move(left);
    e->right = std::move(right);
    return e;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (peek().kind == TokenKind::seq) {
      const SourceLocation where = tokens_[pos_++].where;
      left = binary(Expr::Kind::seq, std::move(left), term(), where);
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (peek().kind == TokenKind::star) {
      const SourceLocation where = tokens_[pos_++].where;
      left = binary(Expr::Kind::par, std::move(left), factor(), where);
    }
    return left;
  }

  ExprPtr factor() {
    if (accept(TokenKind::lparen)) {
      ExprPtr inner = expr();
      if (peek().kind != TokenKind::rparen) fail({"'>>'", "'*'", "')'"});
      ++pos_;
      return inner;
    }
    if (peek().kind != TokenKind::identifier) fail({"atom", "game name", "'('"});
    const Token name = tokens_[pos_++];
    auto e = std::make_shared<Expr>();
    e->where = name.where;
    e->name = name.text;
    if (peek().kind != TokenKind::lparen) {
      e->kind = Expr::Kind::ref;
      return e;
    }
    const auto signature = atom_signature(name.text);
    if (!signature) {
      throw ParseError(name.where, "identifier '" + name.text + "'",
                       atom_kinds());
    }
    e->kind = Expr::Kind::atom;
    expect(TokenKind::lparen);
    for (std::size_t i = 0; i < signature->size(); ++i) {
      if (i > 0) expect(TokenKind::comma);
      e->args.push_back(argument((*signature)[i]));
    }
    expect(TokenKind::rparen);
    return e;
  }

  Arg argument(ArgKind kind) {
    Arg a;
    a.where = peek().where;
    switch (kind) {
      case ArgKind::object: a.value = object(); break;
      case ArgKind::set:
      case ArgKind::fun: a.value = expect(TokenKind::identifier).text; break;
      case ArgKind::selection: a.value = selection(); break;
    }
    return a;
  }

  ObjectExpr object() {
    ObjectExpr o;
    o.where = expect(TokenKind::lbracket).where;
    if (accept(TokenKind::rbracket)) return o;
    for (;;) {
      WireRef w;
      w.where = peek().where;
      w.set = expect(TokenKind::identifier).text;
      if (accept(TokenKind::plus)) {
        w.polarity = Polarity::forward;
      } else if (accept(TokenKind::minus)) {
        w.polarity = Polarity::backward;
      } else {
        fail({"'+'", "'-'"});
      }
      o.wires.push_back(std::move(w));
      if (accept(TokenKind::rbracket)) return o;
      if (peek().kind != TokenKind::comma) fail({"','", "']'"});
      ++pos_;
    }
  }

  Selection selection() {
    if (peek().kind == TokenKind::identifier) {
      const std::string& s = peek().text;
      if (s == "argmax" || s == "fix") {
        ++pos_;
        return Selection{s == "argmax" ? Selection::Kind::argmax
                                       : Selection::Kind::fix,
                         {}};
      }
      if (s == "const" && peek2().kind == TokenKind::lparen) {
        pos_ += 2;
        Selection sel{Selection::Kind::constant,
                      expect(TokenKind::identifier).text};
        expect(TokenKind::rparen);
        return sel;
      }
    }
    fail({"'argmax'", "'fix'", "'const'"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::kw_set: return "'set'";
    case TokenKind::kw_fun: return "'fun'";
    case TokenKind::kw_game: return "'game'";
    case TokenKind::equals: return "'='";
    case TokenKind::colon: return "':'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::comma: return "','";
    case TokenKind::arrow: return "'->'";
    case TokenKind::seq: return "'>>'";
    case TokenKind::star: return "'*'";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  auto emit = [&](TokenKind kind, std::size_t n) {
    out.push_back(Token{kind, std::string(text.substr(i, n)), {line, column}});
    advance(n);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (is_ident_char(c)) {
      std::size_t n = 0;
      while (i + n < text.size() && is_ident_char(text[i + n])) ++n;
      const std::string_view word = text.substr(i, n);
      const TokenKind kind = word == "set"    ? TokenKind::kw_set
                             : word == "fun"  ? TokenKind::kw_fun
                             : word == "game" ? TokenKind::kw_game
                                              : TokenKind::identifier;
      emit(kind, n);
      continue;
    }
    const char next = i + 1 < text.size() ? text[i + 1] : '\0';
    switch (c) {
      case '=': emit(TokenKind::equals, 1); break;
      case ':': emit(TokenKind::colon, 1); break;
      case ';': emit(TokenKind::semicolon, 1); break;
      case ',': emit(TokenKind::comma, 1); break;
      case '*': emit(TokenKind::star, 1); break;
      case '+': emit(TokenKind::plus, 1); break;
      case '(': emit(TokenKind::lparen, 1); break;
      case ')': emit(TokenKind::rparen, 1); break;
      case '[': emit(TokenKind::lbracket, 1); break;
      case ']': emit(TokenKind::rbracket, 1); break;
      case '{': emit(TokenKind::lbrace, 1); break;
      case '}': emit(TokenKind::rbrace, 1); break;
      case '-':
        if (next == '>') {
          emit(TokenKind::arrow, 2);
        } else {
          emit(TokenKind::minus, 1);
        }
        break;
      case '>':
        if (next != '>') throw LexError({line, column}, "expected '>>'");
        emit(TokenKind::seq, 2);
        break;
      default:
        throw LexError({line, column},
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{TokenKind::end, "", {line, column}});
  return out;
}

Program parse(std::string_view text) { return Parser(tokenize(text)).program(); }

}  // namespace og::dsl
