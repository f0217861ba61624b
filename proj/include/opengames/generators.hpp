#pragma once

#include "opengames/open_game.hpp"
#include "opengames/selection.hpp"

namespace og {

/// epsilon_X : [X+, X-] -> I, returning the forward value on the backward wire.
OpenGame counit(const FiniteSet& x);

/// (f, 1) : [X+] -> [Y+].
OpenGame lift_forward(const FnTable& f);
/// (1, f) : [Y-] -> [X-], applying f to the incoming backward value.
OpenGame lift_backward(const FnTable& f);

/// Agent (X, 1) -> (Y, R) choosing by `e`; strategies are all tables X -> Y.
/// A unit observation set yields the domain I.
OpenGame agent(const SelectionFunction& e, const FiniteSet& x);

/// Fixpoint agent I -> [X+, X-] with strategy set X itself.
OpenGame eta(const FiniteSet& x);

enum class BlackKind { delete_forward, copy_forward, delete_backward, copy_backward };

/// Lifted copy/delete structure:
///   delete_forward  : [X+] -> I
///   copy_forward    : [X+] -> [X+, X+]
///   delete_backward : I -> [X-]
///   copy_backward   : [X-, X-] -> [X-]
OpenGame black(BlackKind kind, const FiniteSet& x);

enum class WhiteKind { spawn_forward, merge_forward, spawn_backward, merge_backward };

/// Matching structure with strategy set X:
///   spawn_forward  : I -> [X+]
///   merge_forward  : [X+, X+] -> [X+]
///   spawn_backward : [X-] -> I
///   merge_backward : [X-] -> [X-, X-]
OpenGame white(WhiteKind kind, const FiniteSet& x);

enum class SnakeKind { right, left };
enum class SnakeForm { built, normal };

/// right : [X+] -> [X+], left : [X-] -> [X-]. The built form is the composite
/// of eta, counit, sym and identities; the normal form is the four-line data.
OpenGame snake(SnakeKind kind, const FiniteSet& x, SnakeForm form);

/// eta_X followed by epsilon_X : I -> I.
OpenGame loop(const FiniteSet& x);

/// Two fixpoint agents, each predicting the other: I -> I.
OpenGame coordination(const FiniteSet& x);

}  // namespace og
