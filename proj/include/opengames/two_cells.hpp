#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opengames/open_game.hpp"

namespace og {

/// A candidate globular morphism alpha : source => target.
struct GameMorphism {
  OpenGame source;
  OpenGame target;
  FnTable alpha;
};

enum class MorphismCondition { play, coplay, equilibrium };
std::string to_string(MorphismCondition c);

/// The first violated condition with its concrete witness. `r` is set for
/// coplay failures, `k` for equilibrium failures.
struct MorphismFailure {
  MorphismCondition condition = MorphismCondition::play;
  std::size_t sigma = 0;
  std::size_t x = 0;
  std::optional<std::size_t> r;
  std::optional<FnTable> k;

  /// `equilibrium: sigma=(0, *) x=* k={0 -> 1, 1 -> 1}`.
  std::string describe(const OpenGame& source) const;
};

struct MorphismVerdict {
  bool pass = false;
  /// Passed without checking anything: empty source strategy set, or no
  /// contexts.
  bool vacuous = false;
  std::optional<MorphismFailure> failure;
};

/// Checks play, coplay and equilibrium preservation over every strategy and
/// context. Throws TypeMismatch unless the boundaries have the same type and
/// alpha runs between the strategy sets.
MorphismVerdict check_morphism(const GameMorphism& m);

/// Per-strategy data of a game: its play and coplay rows and the set of
/// contexts (in enumeration order) where it is an equilibrium.
class Profile {
 public:
  explicit Profile(const OpenGame& g);

  const OpenGame& game() const { return game_; }
  std::size_t strategy_count() const { return strategies_; }
  std::size_t context_count() const { return contexts_; }

  std::span<const std::size_t> play_row(std::size_t sigma) const;
  std::span<const std::size_t> coplay_row(std::size_t sigma) const;
  bool in_equilibrium(std::size_t sigma, std::size_t context) const;
  std::span<const std::uint64_t> equilibrium_column(std::size_t sigma) const;

  /// Byte string equal for two games iff they are isomorphic.
  std::string iso_key() const;

 private:
  OpenGame game_;
  std::size_t strategies_ = 0;
  std::size_t contexts_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> columns_;
};

/// For each source strategy, the target strategies it may be sent to.
/// Morphisms are exactly the choice functions of this relation.
std::vector<std::vector<std::size_t>> compatible_targets(const Profile& g,
                                                         const Profile& h);

/// Number of morphisms g => h, saturating.
std::size_t count_morphisms(const OpenGame& g, const OpenGame& h);
/// Every morphism g => h in lexicographic order of alpha. Guarded by the size
/// cap on the number of results.
std::vector<GameMorphism> find_morphisms(const OpenGame& g, const OpenGame& h);

struct IsoVerdict {
  bool pass = false;
  bool bijective = false;
  MorphismVerdict forward;
  MorphismVerdict backward;
};

IsoVerdict check_iso(const OpenGame& g, const OpenGame& h, const FnTable& alpha);
/// A bijection Sigma(g) -> Sigma(h) respecting play, coplay and equilibria in
/// both directions, if one exists.
std::optional<FnTable> find_iso(const OpenGame& g, const OpenGame& h);

/// The inverse of a bijective table.
FnTable inverse(const FnTable& alpha);

/// sigma ~ tau in context (x, k): equal play y, and equal coplay at k(y).
struct SimWitness {
  Context context;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t play = 0;
  std::size_t coplay = 0;
};

/// An equilibrium with no partner on the other side.
struct SimFailure {
  Context context;
  std::size_t strategy = 0;
  bool from_left = true;

  std::string describe(const OpenGame& g, const OpenGame& h) const;
};

struct SimVerdict {
  bool pass = false;
  bool vacuous = false;
  std::size_t contexts = 0;
  std::optional<SimFailure> failure;
  /// One witness per equilibrium on each side, when requested.
  std::vector<SimWitness> witnesses;
};

SimVerdict sim_check(const OpenGame& g, const OpenGame& h,
                     bool record_witnesses = false);

/// For each context, the sorted set of (play, coplay at k(play)) over the
/// equilibria. Two games are ~ iff their signatures are equal.
std::vector<std::size_t> sim_signature(const OpenGame& g);

}  // namespace og
