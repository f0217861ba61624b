#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "opengames/boundary.hpp"
#include "opengames/fn_table.hpp"

namespace og {

/// How equilibrium predicates consult their sub-games: through the per-context
/// cache of each game, or by recomputing everything from scratch.
enum class EvalMode { memoized, direct };

/// Equilibrium predicate (x, k, sigma) -> bool, with x an index into the
/// forward set of the domain, k the image list of a continuation
/// forward(cod) -> backward(cod), and sigma a strategy index.
using EquilibriumFn = std::function<bool(
    std::size_t x, std::span<const std::size_t> k, std::size_t sigma,
    EvalMode mode)>;

/// A context (x, k) for a game.
struct Context {
  std::size_t x = 0;
  FnTable k;
};

/// An open game G : (X, S) -> (Y, R).
///
/// Strategy set, play and coplay are stored as tables; the equilibrium
/// predicate is a function built compositionally and memoized per context.
/// Values are immutable and share their representation on copy. The memo is
/// safe to populate from several threads.
class OpenGame {
 public:
  /// `always_equilibrium` declares the predicate constantly true, letting
  /// evaluation skip it.
  OpenGame(Boundary dom, Boundary cod, FiniteSet strategies, FnTable play,
           FnTable coplay, EquilibriumFn equilibrium,
           bool always_equilibrium = false);

  /// One strategy, in equilibrium in every context.
  static OpenGame strategically_trivial(Boundary dom, Boundary cod,
                                        FnTable view, FnTable update);

  const Boundary& dom() const;
  const Boundary& cod() const;
  const FiniteSet& strategies() const;
  /// Table over strategies * forward(dom) -> forward(cod).
  const FnTable& play_table() const;
  /// Table over strategies * forward(dom) * backward(cod) -> backward(dom).
  const FnTable& coplay_table() const;

  std::size_t play(std::size_t sigma, std::size_t x) const;
  std::size_t coplay(std::size_t sigma, std::size_t x, std::size_t r) const;

  bool is_equilibrium(std::size_t x, std::span<const std::size_t> k,
                      std::size_t sigma,
                      EvalMode mode = EvalMode::memoized) const;
  /// Membership mask over the strategy set.
  std::vector<char> equilibrium_mask(std::size_t x,
                                     std::span<const std::size_t> k,
                                     EvalMode mode = EvalMode::memoized) const;

  /// True when the predicate is known to be constantly true without
  /// evaluation (lenses and composites of lenses).
  bool always_in_equilibrium() const;
  const EquilibriumFn& equilibrium() const;

  /// |forward(dom)| * |backward(cod)|^|forward(cod)|, saturating.
  std::size_t context_count() const;
  std::size_t memo_entries() const;

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

/// Identity game on a boundary.
OpenGame identity(const Boundary& b);

/// Strategically trivial game from a lens. `view` maps forward(dom) to
/// forward(cod); `update` maps forward(dom) * backward(cod) to backward(dom).
OpenGame from_lens(const Boundary& dom, const Boundary& cod,
                   const FnTable& view, const FnTable& update);
/// Boundaries inferred as pair(X, S) -> pair(Y, R), where update's domain is
/// the binary product X * R.
OpenGame from_lens(const FnTable& view, const FnTable& update);

/// Sequential composition: g then h. Requires cod(g) == dom(h) as wire lists.
OpenGame compose(const OpenGame& g, const OpenGame& h);
/// Parallel composition; wire lists concatenate.
OpenGame tensor(const OpenGame& g, const OpenGame& h);
/// Braiding a (x) b -> b (x) a.
OpenGame sym(const Boundary& a, const Boundary& b);

/// Throws TypeMismatch unless `ctx` is a context for `g`.
void check_context(const OpenGame& g, const Context& ctx);
/// Nash equilibria of `g` in `ctx`.
SubsetTable nash(const OpenGame& g, const Context& ctx,
                 EvalMode mode = EvalMode::memoized);

/// Every context of `g`: x outermost, then continuations in enumeration
/// order. Guarded by the size cap.
std::vector<Context> all_contexts(const OpenGame& g);

/// Visits contexts of a game with the given boundaries without materializing
/// tables. `index` counts from zero in the same order as all_contexts.
void for_each_context(
    const Boundary& dom, const Boundary& cod,
    const std::function<void(std::size_t index, std::size_t x,
                             std::span<const std::size_t> k)>& visit);

}  // namespace og
