#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opengames/open_game.hpp"
#include "opengames/two_cells.hpp"

namespace og {

/// A diagram term over a single carrier B, with its elaborated game. `text`
/// is concrete diagram syntax valid after `term_preamble`.
struct Term {
  std::string text;
  OpenGame game;
  int depth = 0;
};

struct TermLimits {
  /// Maximum number of wires on dom and cod together.
  std::size_t max_wires = 4;
  std::size_t max_strategies = 64;
  std::size_t max_contexts = 4096;
  /// Stop adding terms at a depth once this many are known.
  std::size_t max_terms = 20000;
};

/// `set B = {0, ..., n-1};` followed by one `fun` per function B -> B.
std::string term_preamble(std::size_t set_size);

/// The depth-0 generators over a carrier of the given size.
std::vector<Term> atom_terms(std::size_t set_size);

/// Terms up to `depth`, closed under `>>` and `*`, one representative per
/// isomorphism class, in generation order.
std::vector<Term> enumerate_terms(int depth, std::size_t set_size,
                                  const TermLimits& limits = {},
                                  unsigned threads = 1);

struct SimCounterexample {
  Term g;
  Term g2;
  Term h;
  Term h2;
  SimVerdict left;
  SimVerdict right;
  SimVerdict composite;
  /// All three verdicts as required: G ~ G', H ~ H', H.G !~ H'.G'.
  bool verified = false;
};

struct SimSearchResult {
  int max_depth = 0;
  std::size_t set_size = 0;
  TermLimits limits;
  /// Depth at which the search stopped.
  int depth_reached = 0;
  std::vector<std::size_t> terms_per_depth;
  std::size_t composites_checked = 0;
  std::optional<SimCounterexample> counterexample;
};

/// Looks for G ~ G' and H ~ H' with G >> H not ~ G' >> H', trying depths in
/// increasing order and stopping at the first hit.
SimSearchResult sim_compositionality_search(int max_depth, std::size_t set_size,
                                            const TermLimits& limits = {},
                                            unsigned threads = 1);

}  // namespace og
