// og: command-line front end for the open games engine.
//
// Exit status: 0 success, 1 check failure, 2 usage or I/O error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "opengames/dsl/parser.hpp"
#include "opengames/dsl/program.hpp"
#include "opengames/errors.hpp"
#include "opengames/laws.hpp"
#include "opengames/search.hpp"
#include "opengames/size_guard.hpp"
#include "opengames/two_cells.hpp"

namespace {

using namespace og;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Bad invocation or unreadable input; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) return out;
    start = at + sep.size();
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

dsl::TypedProgram load(const std::string& path) {
  return dsl::typecheck(dsl::parse(read_file(path)));
}

/// Strategies print by their non-unit leaves: `(0, 1)` rather than
/// `((0, *), (*, 1))`.
std::string show_strategy(const Value& v) {
  const auto leaves = non_unit_leaves(v);
  if (leaves.empty()) return kStar;
  if (leaves.size() == 1) return leaves[0].to_string();
  return Value::tuple(leaves).to_string();
}

std::size_t find_strategy(const FiniteSet& sigma, const std::string& text) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Value v = sigma.element(i);
    if (v.to_string() == text) return i;
    if (show_strategy(v) == text) {
      if (hit) throw UsageError("strategy '" + text + "' is ambiguous; use the full form");
      hit = i;
    }
  }
  if (!hit) throw UsageError("no strategy '" + text + "'");
  return *hit;
}

/// A comma-separated list of labels, one per wire, as an element of the
/// product of those wires' carriers.
std::size_t parse_point(const FiniteSet& product_set, std::size_t wires,
                        const std::string& text, const char* what) {
  std::vector<std::string> labels = text.empty() ? std::vector<std::string>{}
                                                 : split(text, ",");
  if (wires == 0 && (labels.empty() || labels == std::vector<std::string>{kStar})) {
    return 0;
  }
  if (labels.size() != wires) {
    throw UsageError(std::string(what) + " '" + text + "' needs " +
                     std::to_string(wires) + " comma-separated values");
  }
  std::vector<Value> items;
  for (const std::string& l : labels) items.push_back(Value::atom(l));
  const Value v = wires == 1 ? items[0] : Value::tuple(items);
  const auto index = product_set.find(v);
  if (!index) throw UsageError(std::string(what) + " '" + text + "' is out of range");
  return *index;
}

std::size_t count_wires(const Boundary& b, Polarity p) {
  std::size_t n = 0;
  for (const Wire& w : b.wires()) n += w.polarity == p ? 1 : 0;
  return n;
}

std::string show_point(const FiniteSet& s, std::size_t i) {
  return s.element(i).to_string();
}

std::string show_continuation(const FnTable& k) {
  std::string out;
  for (std::size_t y = 0; y < k.domain().size(); ++y) {
    if (y > 0) out += ";";
    out += show_point(k.domain(), y) + "->" + show_point(k.codomain(), k(y));
  }
  return out;
}

Json report_of(LawInstance record, std::vector<std::size_t> sizes = {}) {
  return make_report({std::move(record)}, sizes, false);
}

void emit_report(const Json& report, bool json) {
  if (json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const Json& r : report["records"]) {
    std::cout << r["status"].get<std::string>() << "  " << r["check_id"].get<std::string>()
              << " " << r["parameters"].dump() << "  expected "
              << r["witness"]["expected"].get<std::string>() << ", observed "
              << r["witness"]["observed"].get<std::string>() << "\n";
  }
}

// check ---------------------------------------------------------------------

int cmd_check(const std::string& path) {
  const std::string text = read_file(path);
  dsl::TypedProgram t = [&] {
    try {
      return dsl::typecheck(dsl::parse(text));
    } catch (const Error& e) {
      std::cerr << path << ":" << e.what() << "\n";
      throw;
    }
  }();
  for (const dsl::TypedGame& g : t.games()) {
    std::cout << g.name << " : " << g.dom.to_string() << " -> " << g.cod.to_string()
              << "\n";
  }
  int status = kOk;
  for (const dsl::BoundaryAnnotation& a : dsl::boundary_annotations(text)) {
    const dsl::TypedGame* g = nullptr;
    for (const dsl::TypedGame& c : t.games()) {
      if (c.name == a.game) g = &c;
    }
    if (g == nullptr) {
      std::cerr << path << ":" << a.line << ": annotated game '" << a.game
                << "' is not declared\n";
      status = kCheckFailed;
    } else if (g->dom.to_string() != a.dom || g->cod.to_string() != a.cod) {
      std::cerr << path << ":" << a.line << ": '" << a.game << "' is "
                << g->dom.to_string() << " -> " << g->cod.to_string()
                << ", annotation says " << a.dom << " -> " << a.cod << "\n";
      status = kCheckFailed;
    }
  }
  return status;
}

// nash ----------------------------------------------------------------------

struct NashArgs {
  std::string file;
  std::string game;
  std::optional<std::string> x;
  std::optional<std::string> k;
  bool all_contexts = false;
  bool json = false;
};

Context parse_context(const OpenGame& g, const NashArgs& a) {
  const FiniteSet& fx = g.dom().forward();
  const FiniteSet& fy = g.cod().forward();
  const FiniteSet& br = g.cod().backward();
  Context c;
  if (a.x) {
    c.x = parse_point(fx, count_wires(g.dom(), Polarity::forward), *a.x, "--x");
  } else if (fx.size() != 1) {
    throw UsageError("--x is required: the domain has " + std::to_string(fx.size()) +
                     " forward values");
  }
  const std::size_t ny = count_wires(g.cod(), Polarity::forward);
  const std::size_t nr = count_wires(g.cod(), Polarity::backward);
  if (!a.k) {
    if (br.size() != 1 && fy.size() != 0) {
      throw UsageError("--k is required: the codomain has more than one continuation");
    }
    c.k = FnTable::from_indices(fy, br, [](std::size_t) { return 0; });
    return c;
  }
  std::vector<std::size_t> images(fy.size(), br.size());
  for (const std::string& entry : split(*a.k, ";")) {
    if (entry.empty()) continue;
    const auto parts = split(entry, "->");
    if (parts.size() != 2) throw UsageError("--k entry '" + entry + "' is not y->r");
    const std::size_t y = parse_point(fy, ny, parts[0], "--k input");
    images[y] = parse_point(br, nr, parts[1], "--k output");
  }
  for (std::size_t y = 0; y < images.size(); ++y) {
    if (images[y] == br.size()) {
      throw UsageError("--k has no value for " + show_point(fy, y));
    }
  }
  c.k = FnTable(fy, br, std::move(images));
  return c;
}

int cmd_nash(const NashArgs& a) {
  const dsl::TypedProgram t = load(a.file);
  const OpenGame g = dsl::elaborate(t, a.game);
  std::vector<Context> contexts;
  if (a.all_contexts) {
    if (a.x || a.k) throw UsageError("--all-contexts excludes --x and --k");
    contexts = all_contexts(g);
  } else {
    contexts.push_back(parse_context(g, a));
    check_context(g, contexts.back());
  }
  Json out{{"game", a.game},
           {"dom", g.dom().to_string()},
           {"cod", g.cod().to_string()},
           {"strategies", g.strategies().size()},
           {"contexts", Json::array()}};
  for (const Context& c : contexts) {
    const SubsetTable eq = nash(g, c);
    Json list = Json::array();
    for (std::size_t s : eq.indices()) list.push_back(show_strategy(g.strategies().element(s)));
    const std::string x = show_point(g.dom().forward(), c.x);
    const std::string k = show_continuation(c.k);
    if (!a.json) {
      std::cout << "x=" << x << " k={" << k << "} : {";
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::cout << (i ? ", " : "") << list[i].get<std::string>();
      }
      std::cout << "}\n";
    }
    out["contexts"].push_back(Json{{"x", x}, {"k", k}, {"equilibria", list}});
  }
  if (a.json) std::cout << out.dump(2) << "\n";
  return kOk;
}

// laws ----------------------------------------------------------------------

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  if (trim(text).empty()) return out;
  for (const std::string& s : split(text, ",")) {
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw UsageError("bad size '" + s + "' in --sizes");
    }
    out.push_back(n);
  }
  return out;
}

int cmd_laws(const std::string& sizes_text, const std::string& filter, bool json,
             bool timings, unsigned threads) {
  SuiteOptions options;
  options.sizes = parse_sizes(sizes_text);
  options.filter = filter;
  options.timings = timings;
  options.threads = threads;
  const auto records = run_suite(options);
  const Json report = make_report(records, options.sizes, timings);
  emit_report(report, json);
  for (const LawInstance& r : records) {
    if (r.status == Status::fail) return kCheckFailed;
  }
  return kOk;
}

// morphisms / iso -----------------------------------------------------------

FnTable parse_mapping(const OpenGame& from, const OpenGame& to, const std::string& text) {
  const FiniteSet& a = from.strategies();
  const FiniteSet& b = to.strategies();
  std::vector<std::size_t> images(a.size(), b.size());
  for (const std::string& entry : split(text, ";")) {
    if (entry.empty()) continue;
    const auto parts = split(entry, "->");
    if (parts.size() != 2) throw UsageError("mapping entry '" + entry + "' is not s->t");
    images[find_strategy(a, parts[0])] = find_strategy(b, parts[1]);
  }
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (images[s] == b.size()) {
      throw UsageError("mapping has no image for " + show_strategy(a.element(s)));
    }
  }
  return FnTable(a, b, std::move(images));
}

std::string show_alpha(const FnTable& alpha) {
  std::string out = "{";
  for (std::size_t s = 0; s < alpha.domain().size(); ++s) {
    out += (s ? ", " : "") + show_strategy(alpha.domain().element(s)) + " -> " +
           show_strategy(alpha.codomain().element(alpha(s)));
  }
  return out + "}";
}

Json failure_json(const MorphismVerdict& v, const OpenGame& source) {
  if (!v.failure) return Json(nullptr);
  return Json(v.failure->describe(source));
}

int cmd_morphisms(const std::string& file, const std::string& from, const std::string& to,
                  bool find_all, const std::optional<std::string>& check, bool json) {
  if (find_all == check.has_value()) {
    throw UsageError("give exactly one of --find-all and --check");
  }
  const dsl::TypedProgram t = load(file);
  const OpenGame g = dsl::elaborate(t, from);
  const OpenGame h = dsl::elaborate(t, to);
  LawInstance r;
  r.law_id = "morphisms";
  r.parameters = Json{{"file", std::filesystem::path(file).filename().string()},
                      {"from", from},
                      {"to", to}};
  if (find_all) {
    const auto forward = find_morphisms(g, h);
    const std::size_t reverse = count_morphisms(h, g);
    Json list = Json::array();
    for (const GameMorphism& m : forward) list.push_back(show_alpha(m.alpha));
    r.expected = "enumeration";
    r.observed = "forward=" + std::to_string(forward.size()) +
                 " reverse=" + std::to_string(reverse);
    r.status = Status::pass;
    r.details = Json{{"forward_count", forward.size()},
                     {"reverse_count", reverse},
                     {"morphisms", list}};
  } else {
    const FnTable alpha = parse_mapping(g, h, *check);
    const MorphismVerdict v = check_morphism({g, h, alpha});
    r.expected = "morphism";
    r.observed = v.pass ? "morphism" : "not-a-morphism";
    r.status = v.pass ? (v.vacuous ? Status::vacuous : Status::pass) : Status::fail;
    r.details = Json{{"alpha", show_alpha(alpha)}, {"failure", failure_json(v, g)}};
  }
  const bool failed = r.status == Status::fail;
  emit_report(report_of(std::move(r)), json);
  return failed ? kCheckFailed : kOk;
}

int cmd_iso(const std::string& file, const std::string& left, const std::string& right,
            bool json) {
  const dsl::TypedProgram t = load(file);
  const OpenGame g = dsl::elaborate(t, left);
  const OpenGame h = dsl::elaborate(t, right);
  if (!same_type(g.dom(), h.dom()) || !same_type(g.cod(), h.cod())) {
    throw TypeMismatch("'" + left + "' and '" + right + "' have different boundaries");
  }
  const auto alpha = find_iso(g, h);
  LawInstance r;
  r.law_id = "iso";
  r.parameters = Json{{"file", std::filesystem::path(file).filename().string()},
                      {"left", left},
                      {"right", right}};
  r.expected = "iso";
  r.observed = alpha ? "iso" : "no-iso";
  r.status = alpha ? Status::pass : Status::fail;
  r.details = Json{{"alpha", alpha ? Json(show_alpha(*alpha)) : Json(nullptr)},
                   {"forward_count", count_morphisms(g, h)},
                   {"reverse_count", count_morphisms(h, g)}};
  emit_report(report_of(r), json);
  return alpha ? kOk : kCheckFailed;
}

// search-sim ----------------------------------------------------------------

Json verdict_json(const SimVerdict& v, const OpenGame& g, const OpenGame& h) {
  return Json{{"pass", v.pass},
              {"failure", v.failure ? Json(v.failure->describe(g, h)) : Json(nullptr)}};
}

int cmd_search_sim(int depth, std::size_t size, unsigned threads, bool json) {
  const SimSearchResult res = sim_compositionality_search(depth, size, {}, threads);
  LawInstance r;
  r.law_id = "sim_compositionality";
  r.parameters = Json{{"max_depth", depth}, {"set_size", size}};
  r.expected = "counterexample";
  Json details{{"depth_reached", res.depth_reached},
               {"terms_per_depth", res.terms_per_depth},
               {"composites_checked", res.composites_checked},
               {"limits",
                {{"max_wires", res.limits.max_wires},
                 {"max_strategies", res.limits.max_strategies},
                 {"max_contexts", res.limits.max_contexts},
                 {"max_terms", res.limits.max_terms}}}};
  if (res.counterexample) {
    const SimCounterexample& c = *res.counterexample;
    r.observed = c.verified ? "counterexample" : "unverified";
    r.status = c.verified ? Status::pass : Status::fail;
    details["preamble"] = term_preamble(size);
    details["g"] = c.g.text;
    details["g2"] = c.g2.text;
    details["h"] = c.h.text;
    details["h2"] = c.h2.text;
    details["g_sim_g2"] = verdict_json(c.left, c.g.game, c.g2.game);
    details["h_sim_h2"] = verdict_json(c.right, c.h.game, c.h2.game);
    details["composites"] =
        verdict_json(c.composite, compose(c.g.game, c.h.game), compose(c.g2.game, c.h2.game));
  } else {
    r.observed = "none-within-bounds";
    r.status = Status::exhausted;
  }
  r.details = std::move(details);
  emit_report(report_of(r, {size}), json);
  return r.status == Status::fail ? kCheckFailed : kOk;
}

std::optional<std::size_t> env_size_cap() {
  const char* v = std::getenv("OG_SIZE_CAP");
  if (v == nullptr || *v == '\0') return std::nullopt;
  std::size_t n = 0;
  const std::string_view s(v);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw UsageError("OG_SIZE_CAP must be a non-negative integer");
  }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite open games: diagrams, equilibria, 2-cells and laws"};
  app.require_subcommand(1);
  app.set_version_flag("--version", OPENGAMES_VERSION);
  std::optional<std::size_t> cap_flag;
  app.add_option("--size-cap", cap_flag,
                 "Max items per enumeration (env OG_SIZE_CAP; default 1000000)");

  std::string file;
  auto* check = app.add_subcommand("check", "Parse and typecheck a .og file");
  check->add_option("file", file, "Diagram file")->required();

  NashArgs nash_args;
  auto* nash_cmd = app.add_subcommand("nash", "List Nash equilibria of a game");
  nash_cmd->add_option("file", nash_args.file, "Diagram file")->required();
  nash_cmd->add_option("--game", nash_args.game, "Game name")->required();
  nash_cmd->add_option("--x", nash_args.x, "Forward input, one value per wire: a,b");
  nash_cmd->add_option("--k", nash_args.k, "Continuation: \"y1->r1;y2->r2\"");
  nash_cmd->add_flag("--all-contexts", nash_args.all_contexts, "Enumerate every context");
  nash_cmd->add_flag("--json", nash_args.json, "JSON output");

  std::string sizes = "0,1,2,3";
  std::string filter;
  bool json = false;
  bool timings = false;
  unsigned threads = 1;
  auto* laws = app.add_subcommand("laws", "Run the law suite");
  laws->add_option("--sizes", sizes, "Carrier sizes, comma-separated")->capture_default_str();
  laws->add_option("--filter", filter, "Only law ids containing this substring");
  laws->add_flag("--json", json, "Emit the JSON report");
  laws->add_flag("--timings", timings, "Record elapsed_ms per record");
  laws->add_option("--threads", threads, "Worker threads")->capture_default_str();

  std::string from, to;
  bool find_all = false;
  std::optional<std::string> mapping;
  auto* morph = app.add_subcommand("morphisms", "Enumerate or check morphisms FROM => TO");
  morph->add_option("file", file, "Diagram file")->required();
  morph->add_option("from", from, "Source game")->required();
  morph->add_option("to", to, "Target game")->required();
  morph->add_flag("--find-all", find_all, "Enumerate every morphism");
  morph->add_option("--check", mapping, "Strategy map \"s1->t1;s2->t2\"");
  morph->add_flag("--json", json, "Emit the JSON report");

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("file", file, "Diagram file")->required();
  iso->add_option("left", from, "First game")->required();
  iso->add_option("right", to, "Second game")->required();
  iso->add_flag("--json", json, "Emit the JSON report");

  int depth = 3;
  std::size_t set_size = 2;
  auto* search = app.add_subcommand("search-sim", "Search for a failure of ~ under >>");
  search->add_option("--depth", depth, "Maximum term depth")->capture_default_str();
  search->add_option("--size", set_size, "Carrier size")->capture_default_str();
  search->add_option("--threads", threads, "Worker threads")->capture_default_str();
  search->add_flag("--json", json, "Emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (const auto env = env_size_cap()) set_size_cap(*env);
    if (cap_flag) set_size_cap(*cap_flag);
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    if (*check) return cmd_check(file);
    if (*nash_cmd) return cmd_nash(nash_args);
    if (*laws) return cmd_laws(sizes, filter, json, timings, threads);
    if (*morph) return cmd_morphisms(file, from, to, find_all, mapping, json);
    if (*iso) return cmd_iso(file, from, to, json);
    if (*search) return cmd_search_sim(depth, set_size, threads, json);
  } catch (const UsageError& e) {
    std::cerr << "og: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // cmd_check has already printed located diagnostics.
    if (!*check) std::cerr << "og: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
