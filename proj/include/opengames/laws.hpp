#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opengames/open_game.hpp"
#include "opengames/two_cells.hpp"

namespace og {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, vacuous, exhausted };
std::string to_string(Status s);

/// Claim kinds a law can make about a pair of games.
enum class Expectation {
  iso,
  morphism_exists,
  morphism_absent,
  two_way_non_iso,
  sim_equivalent
};
std::string to_string(Expectation e);

/// One executed law check.
struct LawInstance {
  std::string law_id;
  Json parameters = Json::object();
  std::string expected;
  std::string observed;
  Status status = Status::fail;
  Json details = Json::object();
  std::optional<double> elapsed_ms;
};

/// Builds alpha : from -> to by mapping the non-unit leaves of each element
/// and picking the unique element of `to` with those leaves.
FnTable relabel_by_leaves(
    const FiniteSet& from, const FiniteSet& to,
    const std::function<std::vector<Value>(const std::vector<Value>&)>& map);
/// Builds alpha : from -> to from a map on element values.
FnTable relabel(const FiniteSet& from, const FiniteSet& to,
                const std::function<Value(const Value&)>& map);

// Individual laws. Carriers of size n are {0, ..., n-1}.

LawInstance law_f_slide_counit(const FnTable& f);
LawInstance law_f_slide_eta(const FnTable& f);
LawInstance law_eta_unit();
LawInstance law_eta_product(const FiniteSet& x, const FiniteSet& y);
LawInstance law_loop_collapse(const FiniteSet& x);
LawInstance law_snake_not_identity(const FiniteSet& x);
LawInstance law_sim_snake(const FiniteSet& x);

enum class Side { covariant, contravariant };
/// Covariant: g : [X+] -> [Y+]. Contravariant: g : [Y-] -> [X-].
LawInstance law_white_slide(const OpenGame& g, Side side);
LawInstance law_white_unit(const FiniteSet& x);
LawInstance law_white_assoc(const FiniteSet& x);
LawInstance law_white_comm(const FiniteSet& x);
LawInstance law_bialgebra(const FiniteSet& x);

/// A game with random tables and strategy set {0, ..., strategies-1}.
OpenGame random_table_game(const Boundary& dom, const Boundary& cod,
                           std::size_t strategies, std::uint64_t seed);

/// Monoidal structure checked through explicit relabelling bijections on
/// sampled terms over a carrier of the given size.
enum class MonoidalLaw { assoc_seq, assoc_tensor, unit, interchange, symmetry };
LawInstance law_monoidal(MonoidalLaw law, std::size_t set_size,
                         std::size_t samples, std::uint64_t seed);

struct SuiteOptions {
  std::vector<std::size_t> sizes;
  /// Substring filter on law ids; empty runs everything.
  std::string filter;
  unsigned threads = 1;
  bool timings = false;
  std::size_t samples = 50;
};

/// Every law over carriers of the given sizes, ordered by law id then
/// parameters.
std::vector<LawInstance> run_suite(const SuiteOptions& options);

/// Law ids known to the suite, sorted.
std::vector<std::string> law_ids();

/// The report document for a list of records.
Json make_report(const std::vector<LawInstance>& records,
                 const std::vector<std::size_t>& sizes, bool timings);
Json to_json(const LawInstance& r, bool timings);

}  // namespace og
