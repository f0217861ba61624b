#include "opengames/two_cells.hpp"

#include <algorithm>
#include <cstring>

#include "opengames/errors.hpp"
#include "opengames/size_guard.hpp"

namespace og {

namespace {

void require_globular(const OpenGame& g, const OpenGame& h, const char* what) {
  if (!same_type(g.dom(), h.dom()) || !same_type(g.cod(), h.cod())) {
    throw TypeMismatch(std::string(what) + ": " + g.dom().to_string() + " -> " +
                       g.cod().to_string() + " vs " + h.dom().to_string() +
                       " -> " + h.cod().to_string());
  }
}

FnTable continuation(const OpenGame& g, std::span<const std::size_t> k) {
  return FnTable(g.cod().forward(), g.cod().backward(), {k.begin(), k.end()});
}

template <class T>
void append_bytes(std::string& out, std::span<const T> values) {
  const std::size_t n = values.size();
  out.append(reinterpret_cast<const char*>(&n), sizeof n);
  out.append(reinterpret_cast<const char*>(values.data()),
             values.size() * sizeof(T));
}

}  // namespace

std::string to_string(MorphismCondition c) {
  switch (c) {
    case MorphismCondition::play: return "play";
    case MorphismCondition::coplay: return "coplay";
    case MorphismCondition::equilibrium: return "equilibrium";
  }
  return "unknown";
}

std::string MorphismFailure::describe(const OpenGame& source) const {
  std::string out = to_string(condition) + ": sigma=" +
                    source.strategies().element(sigma).to_string() +
                    " x=" + source.dom().forward().element(x).to_string();
  if (r) out += " r=" + source.cod().backward().element(*r).to_string();
  if (k) out += " k=" + k->to_string();
  return out;
}

MorphismVerdict check_morphism(const GameMorphism& m) {
  const OpenGame& g = m.source;
  const OpenGame& h = m.target;
  require_globular(g, h, "morphism");
  if (!same_elements(m.alpha.domain(), g.strategies()) ||
      !same_elements(m.alpha.codomain(), h.strategies())) {
    throw TypeMismatch("morphism: alpha " + m.alpha.domain().name() + " -> " +
                       m.alpha.codomain().name() +
                       " does not map between the strategy sets");
  }
  MorphismVerdict v;
  const std::size_t ns = g.strategies().size();
  const std::size_t nx = g.dom().forward().size();
  const std::size_t nr = g.cod().backward().size();
  if (ns == 0 || g.context_count() == 0) {
    v.pass = true;
    v.vacuous = true;
    return v;
  }
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t x = 0; x < nx; ++x) {
      if (g.play(s, x) != h.play(m.alpha(s), x)) {
        v.failure = MorphismFailure{MorphismCondition::play, s, x, {}, {}};
        return v;
      }
    }
  }
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t r = 0; r < nr; ++r) {
        if (g.coplay(s, x, r) != h.coplay(m.alpha(s), x, r)) {
          v.failure = MorphismFailure{MorphismCondition::coplay, s, x, r, {}};
          return v;
        }
      }
    }
  }
  for_each_context(g.dom(), g.cod(),
                   [&](std::size_t, std::size_t x,
                       std::span<const std::size_t> k) {
                     if (v.failure) return;
                     const auto eg = g.equilibrium_mask(x, k);
                     const auto eh = h.equilibrium_mask(x, k);
                     for (std::size_t s = 0; s < ns; ++s) {
                       if (eg[s] && !eh[m.alpha(s)]) {
                         v.failure =
                             MorphismFailure{MorphismCondition::equilibrium, s,
                                             x, {}, continuation(g, k)};
                         return;
                       }
                     }
                   });
  v.pass = !v.failure;
  return v;
}

Profile::Profile(const OpenGame& g)
    : game_(g),
      strategies_(g.strategies().size()),
      contexts_(g.context_count()) {
  check_size(saturating_mul(strategies_, contexts_), "equilibrium profile");
  words_ = (contexts_ + 63) / 64;
  columns_.assign(strategies_ * words_, 0);
  for_each_context(g.dom(), g.cod(),
                   [&](std::size_t c, std::size_t x,
                       std::span<const std::size_t> k) {
                     const std::uint64_t bit = std::uint64_t{1} << (c % 64);
                     if (g.always_in_equilibrium()) {
                       for (std::size_t s = 0; s < strategies_; ++s)
                         columns_[s * words_ + c / 64] |= bit;
                       return;
                     }
                     const auto mask = g.equilibrium_mask(x, k);
                     for (std::size_t s = 0; s < strategies_; ++s) {
                       if (mask[s]) columns_[s * words_ + c / 64] |= bit;
                     }
                   });
}

std::span<const std::size_t> Profile::play_row(std::size_t sigma) const {
  const std::size_t nx = game_.dom().forward().size();
  return game_.play_table().images().subspan(sigma * nx, nx);
}

std::span<const std::size_t> Profile::coplay_row(std::size_t sigma) const {
  const std::size_t n =
      game_.dom().forward().size() * game_.cod().backward().size();
  return game_.coplay_table().images().subspan(sigma * n, n);
}

bool Profile::in_equilibrium(std::size_t sigma, std::size_t context) const {
  return (columns_[sigma * words_ + context / 64] >> (context % 64)) & 1U;
}

std::span<const std::uint64_t> Profile::equilibrium_column(
    std::size_t sigma) const {
  return std::span<const std::uint64_t>(columns_).subspan(sigma * words_,
                                                          words_);
}

std::string Profile::iso_key() const {
  std::vector<std::string> rows(strategies_);
  for (std::size_t s = 0; s < strategies_; ++s) {
    append_bytes(rows[s], play_row(s));
    append_bytes(rows[s], coplay_row(s));
    append_bytes(rows[s], equilibrium_column(s));
  }
  std::sort(rows.begin(), rows.end());
  std::string key = game_.dom().to_string() + "|" + game_.cod().to_string();
  for (const std::string& row : rows) key += row;
  return key;
}

std::vector<std::vector<std::size_t>> compatible_targets(const Profile& g,
                                                         const Profile& h) {
  require_globular(g.game(), h.game(), "morphism");
  std::vector<std::vector<std::size_t>> out(g.strategy_count());
  for (std::size_t s = 0; s < g.strategy_count(); ++s) {
    const auto col = g.equilibrium_column(s);
    for (std::size_t t = 0; t < h.strategy_count(); ++t) {
      if (!std::ranges::equal(g.play_row(s), h.play_row(t)) ||
          !std::ranges::equal(g.coplay_row(s), h.coplay_row(t))) {
        continue;
      }
      const auto target = h.equilibrium_column(t);
      bool subset = true;
      for (std::size_t w = 0; w < col.size() && subset; ++w) {
        subset = (col[w] & ~target[w]) == 0;
      }
      if (subset) out[s].push_back(t);
    }
  }
  return out;
}

std::size_t count_morphisms(const OpenGame& g, const OpenGame& h) {
  const auto compat = compatible_targets(Profile(g), Profile(h));
  std::size_t n = 1;
  for (const auto& targets : compat) n = saturating_mul(n, targets.size());
  return n;
}

std::vector<GameMorphism> find_morphisms(const OpenGame& g,
                                         const OpenGame& h) {
  const auto compat = compatible_targets(Profile(g), Profile(h));
  std::size_t n = 1;
  for (const auto& targets : compat) n = saturating_mul(n, targets.size());
  check_size(n, "morphisms");
  std::vector<GameMorphism> out;
  out.reserve(n);
  std::vector<std::size_t> digit(compat.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> images(compat.size());
    for (std::size_t s = 0; s < compat.size(); ++s)
      images[s] = compat[s][digit[s]];
    out.push_back(GameMorphism{
        g, h, FnTable(g.strategies(), h.strategies(), std::move(images))});
    for (std::size_t d = compat.size(); d-- > 0;) {
      if (++digit[d] < compat[d].size()) break;
      digit[d] = 0;
    }
  }
  return out;
}

FnTable inverse(const FnTable& alpha) {
  const std::size_t n = alpha.domain().size();
  if (alpha.codomain().size() != n) {
    throw TypeMismatch("inverse: " + alpha.to_string() + " is not bijective");
  }
  std::vector<std::size_t> back(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (back[alpha(s)] != n) {
      throw TypeMismatch("inverse: " + alpha.to_string() + " is not bijective");
    }
    back[alpha(s)] = s;
  }
  return FnTable(alpha.codomain(), alpha.domain(), std::move(back));
}

IsoVerdict check_iso(const OpenGame& g, const OpenGame& h,
                     const FnTable& alpha) {
  IsoVerdict v;
  v.forward = check_morphism(GameMorphism{g, h, alpha});
  const std::size_t n = alpha.domain().size();
  if (alpha.codomain().size() == n) {
    std::vector<char> hit(n, 0);
    v.bijective = true;
    for (std::size_t s = 0; s < n && v.bijective; ++s) {
      v.bijective = !hit[alpha(s)];
      hit[alpha(s)] = 1;
    }
  }
  if (v.bijective) {
    v.backward = check_morphism(GameMorphism{h, g, inverse(alpha)});
  }
  v.pass = v.bijective && v.forward.pass && v.backward.pass;
  return v;
}

std::optional<FnTable> find_iso(const OpenGame& g, const OpenGame& h) {
  require_globular(g, h, "isomorphism");
  const std::size_t n = g.strategies().size();
  if (h.strategies().size() != n) return std::nullopt;
  const Profile pg(g);
  const Profile ph(h);
  std::vector<std::vector<std::size_t>> edges(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (std::ranges::equal(pg.play_row(s), ph.play_row(t)) &&
          std::ranges::equal(pg.coplay_row(s), ph.coplay_row(t)) &&
          std::ranges::equal(pg.equilibrium_column(s),
                             ph.equilibrium_column(t))) {
        edges[s].push_back(t);
      }
    }
    if (edges[s].empty()) return std::nullopt;
  }
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kFree);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t s) {
    for (std::size_t t : edges[s]) {
      if (seen[t]) continue;
      seen[t] = 1;
      if (owner[t] == kFree || augment(owner[t])) {
        owner[t] = s;
        return true;
      }
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    seen.assign(n, 0);
    if (!augment(s)) return std::nullopt;
  }
  std::vector<std::size_t> images(n);
  for (std::size_t t = 0; t < n; ++t) images[owner[t]] = t;
  return FnTable(g.strategies(), h.strategies(), std::move(images));
}

std::string SimFailure::describe(const OpenGame& g, const OpenGame& h) const {
  const OpenGame& side = from_left ? g : h;
  return std::string(from_left ? "left" : "right") +
         " equilibrium without partner: sigma=" +
         side.strategies().element(strategy).to_string() +
         " x=" + side.dom().forward().element(context.x).to_string() +
         " k=" + context.k.to_string();
}

SimVerdict sim_check(const OpenGame& g, const OpenGame& h,
                     bool record_witnesses) {
  require_globular(g, h, "sim");
  SimVerdict v;
  bool any_equilibrium = false;
  for_each_context(
      g.dom(), g.cod(),
      [&](std::size_t, std::size_t x, std::span<const std::size_t> k) {
        ++v.contexts;
        if (v.failure) return;
        const auto eg = g.equilibrium_mask(x, k);
        const auto eh = h.equilibrium_mask(x, k);
        auto match = [&](const OpenGame& a, const std::vector<char>& ea,
                         const OpenGame& b, const std::vector<char>& eb,
                         bool from_left) {
          for (std::size_t s = 0; s < ea.size(); ++s) {
            if (!ea[s]) continue;
            any_equilibrium = true;
            const std::size_t y = a.play(s, x);
            const std::size_t c = a.coplay(s, x, k[y]);
            std::size_t partner = eb.size();
            for (std::size_t t = 0; t < eb.size(); ++t) {
              if (eb[t] && b.play(t, x) == y && b.coplay(t, x, k[y]) == c) {
                partner = t;
                break;
              }
            }
            if (partner == eb.size()) {
              v.failure = SimFailure{Context{x, continuation(g, k)}, s,
                                     from_left};
              return false;
            }
            if (record_witnesses) {
              const std::size_t l = from_left ? s : partner;
              const std::size_t r = from_left ? partner : s;
              v.witnesses.push_back(
                  SimWitness{Context{x, continuation(g, k)}, l, r, y, c});
            }
          }
          return true;
        };
        if (match(g, eg, h, eh, true)) match(h, eh, g, eg, false);
      });
  v.pass = !v.failure;
  v.vacuous = v.pass && (v.contexts == 0 || !any_equilibrium);
  return v;
}

std::vector<std::size_t> sim_signature(const OpenGame& g) {
  std::vector<std::size_t> out;
  const std::size_t ns = g.dom().backward().size();
  std::vector<std::size_t> outcomes;
  for_each_context(g.dom(), g.cod(),
                   [&](std::size_t, std::size_t x,
                       std::span<const std::size_t> k) {
                     outcomes.clear();
                     const auto mask = g.equilibrium_mask(x, k);
                     for (std::size_t s = 0; s < mask.size(); ++s) {
                       if (!mask[s]) continue;
                       const std::size_t y = g.play(s, x);
                       outcomes.push_back(y * ns + g.coplay(s, x, k[y]));
                     }
                     std::sort(outcomes.begin(), outcomes.end());
                     outcomes.erase(
                         std::unique(outcomes.begin(), outcomes.end()),
                         outcomes.end());
                     out.push_back(outcomes.size());
                     out.insert(out.end(), outcomes.begin(), outcomes.end());
                   });
  return out;
}

}  // namespace og
