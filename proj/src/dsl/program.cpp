#include "opengames/dsl/program.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "opengames/generators.hpp"

namespace og::dsl {

namespace {

std::string at(SourceLocation where) {
  return std::to_string(where.line) + ":" + std::to_string(where.column) + ": ";
}

const std::string& arg_name(const Arg& a) { return std::get<std::string>(a.value); }
const ObjectExpr& arg_object(const Arg& a) { return std::get<ObjectExpr>(a.value); }
const Selection& arg_selection(const Arg& a) { return std::get<Selection>(a.value); }

struct Signature {
  Boundary dom;
  Boundary cod;
};

class Checker {
 public:
  explicit Checker(const std::map<std::string, FiniteSet>& sets,
                   const std::map<std::string, FnTable>& funs,
                   const std::map<std::string, Signature>& games)
      : sets_(sets), funs_(funs), games_(games) {}

  Signature infer(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::ref: {
        const auto it = games_.find(e.name);
        if (it == games_.end()) {
          throw UnknownName(at(e.where) + "unknown game '" + e.name + "'");
        }
        return it->second;
      }
      case Expr::Kind::seq: {
        Signature l = infer(*e.left);
        Signature r = infer(*e.right);
        if (!(l.cod == r.dom)) {
          throw TypeMismatch(at(e.where) + "'>>' junction: codomain " +
                             l.cod.to_string() + " does not match domain " +
                             r.dom.to_string());
        }
        return {l.dom, r.cod};
      }
      case Expr::Kind::par: {
        Signature l = infer(*e.left);
        Signature r = infer(*e.right);
        return {concat(l.dom, r.dom), concat(l.cod, r.cod)};
      }
      case Expr::Kind::atom: return atom(e);
    }
    throw Error("unknown expression");
  }

  const FiniteSet& set(const Arg& a) const {
    const auto it = sets_.find(arg_name(a));
    if (it == sets_.end()) {
      throw UnknownName(at(a.where) + "unknown set '" + arg_name(a) + "'");
    }
    return it->second;
  }

  const FnTable& fun(const Arg& a) const {
    const auto it = funs_.find(arg_name(a));
    if (it == funs_.end()) {
      throw UnknownName(at(a.where) + "unknown function '" + arg_name(a) + "'");
    }
    return it->second;
  }

  Boundary object(const Arg& a) const {
    std::vector<Wire> wires;
    for (const WireRef& w : arg_object(a).wires) {
      const auto it = sets_.find(w.set);
      if (it == sets_.end()) {
        throw UnknownName(at(w.where) + "unknown set '" + w.set + "'");
      }
      wires.push_back(Wire{it->second, w.polarity});
    }
    return Boundary(std::move(wires));
  }

  SelectionFunction selection(const Expr& e) const {
    const Selection& s = arg_selection(e.args[0]);
    const FiniteSet& y = set(e.args[2]);
    const FiniteSet& r = set(e.args[3]);
    switch (s.kind) {
      case Selection::Kind::argmax: return argmax_selection(y, r);
      case Selection::Kind::fix:
        if (!(y == r)) {
          throw TypeMismatch(at(e.where) + "fix agent needs equal choice and "
                             "payoff sets, got " + y.name() + " and " + r.name());
        }
        return fix_selection(y);
      case Selection::Kind::constant: {
        const auto index = y.find(Value::atom(s.element));
        if (!index) {
          throw TypeMismatch(at(e.args[0].where) + "'" + s.element +
                             "' is not an element of " + y.name());
        }
        return const_selection(y, r, *index);
      }
    }
    throw Error("unknown selection");
  }

 private:
  Signature atom(const Expr& e) const {
    const std::string& k = e.name;
    if (k == "id") {
      const Boundary b = object(e.args[0]);
      return {b, b};
    }
    if (k == "sym") {
      const Boundary a = object(e.args[0]);
      const Boundary b = object(e.args[1]);
      return {concat(a, b), concat(b, a)};
    }
    if (k == "liftF" || k == "liftB") {
      const FnTable& f = fun(e.args[0]);
      if (k == "liftF") {
        return {Boundary::covariant(f.domain()), Boundary::covariant(f.codomain())};
      }
      return {Boundary::contravariant(f.codomain()),
              Boundary::contravariant(f.domain())};
    }
    if (k == "agent") {
      selection(e);
      return {Boundary::pair(set(e.args[1]), FiniteSet::unit()),
              Boundary::pair(set(e.args[2]), set(e.args[3]))};
    }
    const FiniteSet& x = set(e.args[0]);
    const Boundary p = Boundary::covariant(x);
    const Boundary m = Boundary::contravariant(x);
    const Boundary both = concat(p, m);
    if (k == "counit") return {both, Boundary()};
    if (k == "eta") return {Boundary(), both};
    if (k == "copyF") return {p, concat(p, p)};
    if (k == "delF") return {p, Boundary()};
    if (k == "copyB") return {concat(m, m), m};
    if (k == "delB") return {Boundary(), m};
    if (k == "mergeF") return {concat(p, p), p};
    if (k == "spawnF") return {Boundary(), p};
    if (k == "mergeB") return {m, concat(m, m)};
    if (k == "spawnB") return {m, Boundary()};
    if (k == "triR") return {p, p};
    if (k == "triL") return {m, m};
    throw UnknownName(at(e.where) + "unknown atom '" + k + "'");
  }

  const std::map<std::string, FiniteSet>& sets_;
  const std::map<std::string, FnTable>& funs_;
  const std::map<std::string, Signature>& games_;
};

OpenGame build(const Expr& e, const Checker& check,
               const TypedProgram& program,
               std::map<std::string, OpenGame>& cache);

OpenGame build_atom(const Expr& e, const Checker& check) {
  const std::string& k = e.name;
  if (k == "id") return identity(check.object(e.args[0]));
  if (k == "sym") return sym(check.object(e.args[0]), check.object(e.args[1]));
  if (k == "liftF") return lift_forward(check.fun(e.args[0]));
  if (k == "liftB") return lift_backward(check.fun(e.args[0]));
  if (k == "agent") return agent(check.selection(e), check.set(e.args[1]));
  const FiniteSet& x = check.set(e.args[0]);
  if (k == "counit") return counit(x);
  if (k == "eta") return eta(x);
  if (k == "copyF") return black(BlackKind::copy_forward, x);
  if (k == "delF") return black(BlackKind::delete_forward, x);
  if (k == "copyB") return black(BlackKind::copy_backward, x);
  if (k == "delB") return black(BlackKind::delete_backward, x);
  if (k == "mergeF") return white(WhiteKind::merge_forward, x);
  if (k == "spawnF") return white(WhiteKind::spawn_forward, x);
  if (k == "mergeB") return white(WhiteKind::merge_backward, x);
  if (k == "spawnB") return white(WhiteKind::spawn_backward, x);
  if (k == "triR") return snake(SnakeKind::right, x, SnakeForm::normal);
  if (k == "triL") return snake(SnakeKind::left, x, SnakeForm::normal);
  throw UnknownName(at(e.where) + "unknown atom '" + k + "'");
}

OpenGame build_named(const std::string& name, const Checker& check,
                     const TypedProgram& program,
                     std::map<std::string, OpenGame>& cache) {
  if (const auto it = cache.find(name); it != cache.end()) return it->second;
  OpenGame g = build(program.body(name), check, program, cache);
  cache.emplace(name, g);
  return g;
}

OpenGame build(const Expr& e, const Checker& check,
               const TypedProgram& program,
               std::map<std::string, OpenGame>& cache) {
  switch (e.kind) {
    case Expr::Kind::atom: return build_atom(e, check);
    case Expr::Kind::ref: return build_named(e.name, check, program, cache);
    case Expr::Kind::seq:
      return compose(build(*e.left, check, program, cache),
                     build(*e.right, check, program, cache));
    case Expr::Kind::par:
      return tensor(build(*e.left, check, program, cache),
                    build(*e.right, check, program, cache));
  }
  throw Error("unknown expression");
}

std::map<std::string, Signature> signatures_of(const TypedProgram& p) {
  std::map<std::string, Signature> out;
  for (const TypedGame& g : p.games()) out.emplace(g.name, Signature{g.dom, g.cod});
  return out;
}

void print_object(std::ostringstream& out, const ObjectExpr& o) {
  out << "[";
  for (std::size_t i = 0; i < o.wires.size(); ++i) {
    if (i > 0) out << ", ";
    out << o.wires[i].set
        << (o.wires[i].polarity == Polarity::forward ? "+" : "-");
  }
  out << "]";
}

// Precedence: 0 = sequence, 1 = tensor, 2 = factor.
void print_expr(std::ostringstream& out, const Expr& e, int level) {
  switch (e.kind) {
    case Expr::Kind::ref: out << e.name; return;
    case Expr::Kind::atom: {
      out << e.name << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i > 0) out << ", ";
        const auto& v = e.args[i].value;
        if (const auto* o = std::get_if<ObjectExpr>(&v)) {
          print_object(out, *o);
        } else if (const auto* s = std::get_if<std::string>(&v)) {
          out << *s;
        } else {
          const Selection& sel = std::get<Selection>(v);
          switch (sel.kind) {
            case Selection::Kind::argmax: out << "argmax"; break;
            case Selection::Kind::fix: out << "fix"; break;
            case Selection::Kind::constant: out << "const(" << sel.element << ")"; break;
          }
        }
      }
      out << ")";
      return;
    }
    case Expr::Kind::seq:
    case Expr::Kind::par: {
      const int own = e.kind == Expr::Kind::seq ? 0 : 1;
      if (level > own) out << "(";
      print_expr(out, *e.left, own);
      out << (own == 0 ? " >> " : " * ");
      print_expr(out, *e.right, own + 1);
      if (level > own) out << ")";
      return;
    }
  }
}

}  // namespace

const TypedGame& TypedProgram::game(const std::string& name) const {
  const auto it = game_index_.find(name);
  if (it == game_index_.end()) throw UnknownName("unknown game '" + name + "'");
  return games_[it->second];
}

const FiniteSet& TypedProgram::set(const std::string& name) const {
  const auto it = sets_.find(name);
  if (it == sets_.end()) throw UnknownName("unknown set '" + name + "'");
  return it->second;
}

const FnTable& TypedProgram::fun(const std::string& name) const {
  const auto it = funs_.find(name);
  if (it == funs_.end()) throw UnknownName("unknown function '" + name + "'");
  return it->second;
}

const Expr& TypedProgram::body(const std::string& name) const {
  const auto it = bodies_.find(name);
  if (it == bodies_.end()) throw UnknownName("unknown game '" + name + "'");
  return *it->second;
}

TypedProgram typecheck(Program program) {
  TypedProgram t;
  t.sets_.emplace("1", FiniteSet::unit());
  std::map<std::string, Signature> games;
  const Checker check(t.sets_, t.funs_, games);
  for (const Declaration& d : program.decls) {
    if (const auto* s = std::get_if<SetDecl>(&d)) {
      if (t.sets_.contains(s->name)) {
        throw TypeMismatch(at(s->where) + "set '" + s->name + "' already defined");
      }
      std::set<std::string> seen;
      for (const std::string& e : s->elements) {
        if (!seen.insert(e).second) {
          throw TypeMismatch(at(s->where) + "duplicate element '" + e +
                             "' in set '" + s->name + "'");
        }
      }
      t.sets_.emplace(s->name, FiniteSet::of_labels(s->name, s->elements));
    } else if (const auto* f = std::get_if<FunDecl>(&d)) {
      if (t.funs_.contains(f->name)) {
        throw TypeMismatch(at(f->where) + "function '" + f->name + "' already defined");
      }
      const auto dom = t.sets_.find(f->domain);
      const auto cod = t.sets_.find(f->codomain);
      if (dom == t.sets_.end() || cod == t.sets_.end()) {
        throw UnknownName(at(f->where) + "unknown set '" +
                          (dom == t.sets_.end() ? f->domain : f->codomain) + "'");
      }
      const FiniteSet& a = dom->second;
      const FiniteSet& b = cod->second;
      std::vector<std::size_t> images(a.size(), b.size());
      for (const auto& [from, to] : f->pairs) {
        const auto i = a.find(Value::atom(from));
        const auto j = b.find(Value::atom(to));
        if (!i || !j) {
          throw TypeMismatch(at(f->where) + "function '" + f->name + "': '" +
                             (!i ? from + "' is not in " + a.name()
                                 : to + "' is not in " + b.name()));
        }
        if (images[*i] != b.size()) {
          throw TypeMismatch(at(f->where) + "function '" + f->name +
                             "' maps '" + from + "' twice");
        }
        images[*i] = *j;
      }
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] == b.size()) {
          throw TypeMismatch(at(f->where) + "function '" + f->name +
                             "' is not total: no image for '" +
                             a.element(i).to_string() + "'");
        }
      }
      t.funs_.emplace(f->name, FnTable(a, b, std::move(images)));
    } else {
      const auto& g = std::get<GameDecl>(d);
      if (games.contains(g.name)) {
        throw TypeMismatch(at(g.where) + "game '" + g.name + "' already defined");
      }
      Signature s = check.infer(*g.body);
      t.game_index_.emplace(g.name, t.games_.size());
      t.games_.push_back(TypedGame{g.name, s.dom, s.cod, g.where});
      t.bodies_.emplace(g.name, g.body);
      games.emplace(g.name, std::move(s));
    }
  }
  t.program_ = std::move(program);
  return t;
}

OpenGame elaborate(const TypedProgram& program, const std::string& name) {
  const TypedGame& typed = program.game(name);
  std::map<std::string, FiniteSet> sets;
  std::map<std::string, FnTable> funs;
  sets.emplace("1", FiniteSet::unit());
  for (const Declaration& d : program.program().decls) {
    if (const auto* s = std::get_if<SetDecl>(&d)) sets.emplace(s->name, program.set(s->name));
    if (const auto* f = std::get_if<FunDecl>(&d)) funs.emplace(f->name, program.fun(f->name));
  }
  const auto games = signatures_of(program);
  const Checker check(sets, funs, games);
  std::map<std::string, OpenGame> cache;
  OpenGame g = build_named(name, check, program, cache);
  if (!(g.dom() == typed.dom) || !(g.cod() == typed.cod)) {
    throw TypeMismatch("elaborated game '" + name + "' has boundary " +
                       g.dom().to_string() + " -> " + g.cod().to_string() +
                       ", inferred " + typed.dom.to_string() + " -> " +
                       typed.cod.to_string());
  }
  return g;
}

std::string pretty_print(const Expr& expr) {
  std::ostringstream out;
  print_expr(out, expr, 0);
  return out.str();
}

std::string pretty_print(const Program& program) {
  std::ostringstream out;
  for (const Declaration& d : program.decls) {
    if (const auto* s = std::get_if<SetDecl>(&d)) {
      out << "set " << s->name << " = {";
      for (std::size_t i = 0; i < s->elements.size(); ++i) {
        out << (i ? ", " : "") << s->elements[i];
      }
      out << "};\n";
    } else if (const auto* f = std::get_if<FunDecl>(&d)) {
      out << "fun " << f->name << " : " << f->domain << " -> " << f->codomain
          << " = {";
      for (std::size_t i = 0; i < f->pairs.size(); ++i) {
        out << (i ? ", " : "") << f->pairs[i].first << " -> " << f->pairs[i].second;
      }
      out << "};\n";
    } else {
      const auto& g = std::get<GameDecl>(d);
      out << "game " << g.name << " = ";
      print_expr(out, *g.body, 0);
      out << ";\n";
    }
  }
  return out.str();
}

std::vector<BoundaryAnnotation> boundary_annotations(std::string_view text) {
  static const std::regex pattern(
      R"(^\s*(?://|#)\s*boundary:\s*(\w+)\s*:\s*(\[[^\]]*\])\s*->\s*(\[[^\]]*\])\s*$)");
  std::vector<BoundaryAnnotation> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    std::smatch m;
    if (std::regex_match(line, m, pattern)) {
      out.push_back({m[1].str(), m[2].str(), m[3].str(), n});
    }
  }
  return out;
}

}  // namespace og::dsl
