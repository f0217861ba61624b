#include "opengames/open_game.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "opengames/errors.hpp"
#include "opengames/size_guard.hpp"

namespace og {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::size_t>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::size_t v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<std::size_t> memo_key(std::size_t x,
                                  std::span<const std::size_t> k) {
  std::vector<std::size_t> key;
  key.reserve(k.size() + 1);
  key.push_back(x);
  key.insert(key.end(), k.begin(), k.end());
  return key;
}

FnTable table_over(const FiniteSet& domain, const FiniteSet& codomain,
                   const std::function<std::size_t(std::size_t)>& f,
                   const char* what) {
  check_size(domain.size(), what);
  return FnTable::from_indices(domain, codomain, f);
}

FiniteSet play_domain(const FiniteSet& strategies, const Boundary& dom) {
  return product(strategies, dom.forward());
}

FiniteSet coplay_domain(const FiniteSet& strategies, const Boundary& dom,
                        const Boundary& cod) {
  const FiniteSet parts[] = {strategies, dom.forward(), cod.backward()};
  return product(parts);
}

std::string mismatch(const char* what, const Boundary& a, const Boundary& b) {
  return std::string(what) + ": " + a.to_string() + " does not match " +
         b.to_string();
}

EquilibriumFn always_true() {
  return [](std::size_t, std::span<const std::size_t>, std::size_t, EvalMode) {
    return true;
  };
}

}  // namespace

struct OpenGame::Rep {
  Boundary dom;
  Boundary cod;
  FiniteSet strategies;
  FnTable play;
  FnTable coplay;
  EquilibriumFn equilibrium;
  bool trivial = false;
  std::size_t nx = 0;  // |forward(dom)|
  std::size_t nr = 0;  // |backward(cod)|

  mutable std::shared_mutex memo_mutex;
  mutable std::unordered_map<std::vector<std::size_t>, std::vector<char>,
                             KeyHash>
      memo;
};

OpenGame::OpenGame(Boundary dom, Boundary cod, FiniteSet strategies,
                   FnTable play, FnTable coplay, EquilibriumFn equilibrium,
                   bool always_equilibrium) {
  auto rep = std::make_shared<Rep>();
  if (!same_elements(play.domain(), play_domain(strategies, dom)) ||
      !same_elements(play.codomain(), cod.forward())) {
    throw TypeMismatch("play table does not have type strategies * " +
                       dom.forward().name() + " -> " + cod.forward().name());
  }
  if (!same_elements(coplay.domain(), coplay_domain(strategies, dom, cod)) ||
      !same_elements(coplay.codomain(), dom.backward())) {
    throw TypeMismatch("coplay table does not have type strategies * " +
                       dom.forward().name() + " * " + cod.backward().name() +
                       " -> " + dom.backward().name());
  }
  rep->nx = dom.forward().size();
  rep->nr = cod.backward().size();
  rep->dom = std::move(dom);
  rep->cod = std::move(cod);
  rep->strategies = std::move(strategies);
  rep->play = std::move(play);
  rep->coplay = std::move(coplay);
  rep->equilibrium = std::move(equilibrium);
  rep->trivial = always_equilibrium;
  rep_ = std::move(rep);
}

OpenGame OpenGame::strategically_trivial(Boundary dom, Boundary cod,
                                         FnTable view, FnTable update) {
  if (!same_elements(view.domain(), dom.forward()) ||
      !same_elements(view.codomain(), cod.forward())) {
    throw TypeMismatch("lens view must map " + dom.forward().name() + " to " +
                       cod.forward().name());
  }
  if (update.domain().size() != dom.forward().size() * cod.backward().size() ||
      !same_elements(update.codomain(), dom.backward())) {
    throw TypeMismatch("lens update must map " + dom.forward().name() + " * " +
                       cod.backward().name() + " to " + dom.backward().name());
  }
  const FiniteSet one = FiniteSet::unit();
  FnTable play(play_domain(one, dom), cod.forward(),
               std::vector<std::size_t>(view.images().begin(),
                                        view.images().end()));
  FnTable coplay(coplay_domain(one, dom, cod), dom.backward(),
                 std::vector<std::size_t>(update.images().begin(),
                                          update.images().end()));
  return OpenGame(std::move(dom), std::move(cod), one, std::move(play),
                  std::move(coplay), always_true(), true);
}

const Boundary& OpenGame::dom() const { return rep_->dom; }
const Boundary& OpenGame::cod() const { return rep_->cod; }
const FiniteSet& OpenGame::strategies() const { return rep_->strategies; }
const FnTable& OpenGame::play_table() const { return rep_->play; }
const FnTable& OpenGame::coplay_table() const { return rep_->coplay; }
const EquilibriumFn& OpenGame::equilibrium() const {
  return rep_->equilibrium;
}
bool OpenGame::always_in_equilibrium() const { return rep_->trivial; }

std::size_t OpenGame::play(std::size_t sigma, std::size_t x) const {
  return rep_->play(sigma * rep_->nx + x);
}

std::size_t OpenGame::coplay(std::size_t sigma, std::size_t x,
                             std::size_t r) const {
  return rep_->coplay((sigma * rep_->nx + x) * rep_->nr + r);
}

std::vector<char> OpenGame::equilibrium_mask(std::size_t x,
                                             std::span<const std::size_t> k,
                                             EvalMode mode) const {
  const std::size_t n = rep_->strategies.size();
  if (rep_->trivial) return std::vector<char>(n, 1);
  if (mode == EvalMode::direct) {
    std::vector<char> mask(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      mask[s] = rep_->equilibrium(x, k, s, EvalMode::direct) ? 1 : 0;
    }
    return mask;
  }
  auto key = memo_key(x, k);
  {
    std::shared_lock lock(rep_->memo_mutex);
    auto it = rep_->memo.find(key);
    if (it != rep_->memo.end()) return it->second;
  }
  std::vector<char> mask(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    mask[s] = rep_->equilibrium(x, k, s, EvalMode::memoized) ? 1 : 0;
  }
  std::unique_lock lock(rep_->memo_mutex);
  rep_->memo.emplace(std::move(key), mask);
  return mask;
}

bool OpenGame::is_equilibrium(std::size_t x, std::span<const std::size_t> k,
                              std::size_t sigma, EvalMode mode) const {
  if (rep_->trivial) return true;
  if (mode == EvalMode::direct) {
    return rep_->equilibrium(x, k, sigma, EvalMode::direct);
  }
  auto key = memo_key(x, k);
  {
    std::shared_lock lock(rep_->memo_mutex);
    auto it = rep_->memo.find(key);
    if (it != rep_->memo.end()) return it->second[sigma] != 0;
  }
  return equilibrium_mask(x, k, mode)[sigma] != 0;
}

std::size_t OpenGame::context_count() const {
  return saturating_mul(
      rep_->nx, saturating_pow(rep_->nr, rep_->cod.forward().size()));
}

std::size_t OpenGame::memo_entries() const {
  std::shared_lock lock(rep_->memo_mutex);
  return rep_->memo.size();
}

OpenGame identity(const Boundary& b) {
  const FiniteSet& fwd = b.forward();
  const FiniteSet& bwd = b.backward();
  const std::size_t nr = bwd.size();
  return OpenGame::strategically_trivial(
      b, b, identity_fn(fwd),
      FnTable::from_indices(product(fwd, bwd), bwd,
                            [nr](std::size_t p) { return p % nr; }));
}

OpenGame from_lens(const Boundary& dom, const Boundary& cod,
                   const FnTable& view, const FnTable& update) {
  return OpenGame::strategically_trivial(dom, cod, view, update);
}

OpenGame from_lens(const FnTable& view, const FnTable& update) {
  const FiniteSet& ud = update.domain();
  if (ud.kind() != FiniteSet::Kind::product || ud.factors().size() != 2) {
    throw TypeMismatch("lens update must be defined on a binary product");
  }
  if (!same_elements(ud.factors()[0], view.domain())) {
    throw TypeMismatch("lens update and view disagree on " +
                       view.domain().name());
  }
  return OpenGame::strategically_trivial(
      Boundary::pair(view.domain(), update.codomain()),
      Boundary::pair(view.codomain(), ud.factors()[1]), view, update);
}

OpenGame compose(const OpenGame& g, const OpenGame& h) {
  if (!(g.cod() == h.dom())) {
    throw TypeMismatch(mismatch("sequential composition", g.cod(), h.dom()));
  }
  const FiniteSet strategies = product(g.strategies(), h.strategies());
  const std::size_t nh = h.strategies().size();
  const std::size_t nx = g.dom().forward().size();
  const std::size_t nq = h.cod().backward().size();
  const std::size_t ny = g.cod().forward().size();

  FnTable play = table_over(
      play_domain(strategies, g.dom()), h.cod().forward(),
      [&](std::size_t p) {
        const std::size_t s = p / nx, x = p % nx;
        return h.play(s % nh, g.play(s / nh, x));
      },
      "play table");
  FnTable coplay = table_over(
      coplay_domain(strategies, g.dom(), h.cod()), g.dom().backward(),
      [&](std::size_t p) {
        const std::size_t q = p % nq, sx = p / nq;
        const std::size_t s = sx / nx, x = sx % nx;
        const std::size_t a = s / nh, b = s % nh;
        return g.coplay(a, x, h.coplay(b, g.play(a, x), q));
      },
      "coplay table");

  const bool trivial = g.always_in_equilibrium() && h.always_in_equilibrium();
  EquilibriumFn eq = [g, h, nh, ny](std::size_t x,
                                    std::span<const std::size_t> k,
                                    std::size_t s, EvalMode mode) {
    const std::size_t a = s / nh, b = s % nh;
    if (!h.is_equilibrium(g.play(a, x), k, b, mode)) return false;
    if (g.always_in_equilibrium()) return true;
    std::vector<std::size_t> derived(ny);
    for (std::size_t y = 0; y < ny; ++y) {
      derived[y] = h.coplay(b, y, k[h.play(b, y)]);
    }
    return g.is_equilibrium(x, derived, a, mode);
  };
  return OpenGame(g.dom(), h.cod(), strategies, std::move(play),
                  std::move(coplay), std::move(eq), trivial);
}

OpenGame tensor(const OpenGame& g, const OpenGame& h) {
  const Boundary dom = concat(g.dom(), h.dom());
  const Boundary cod = concat(g.cod(), h.cod());
  const FiniteSet strategies = product(g.strategies(), h.strategies());
  const std::size_t nh = h.strategies().size();
  const std::size_t nxh = h.dom().forward().size();
  const std::size_t nx = dom.forward().size();
  const std::size_t nyg = g.cod().forward().size();
  const std::size_t nyh = h.cod().forward().size();
  const std::size_t nrh = h.cod().backward().size();
  const std::size_t nr = cod.backward().size();
  const std::size_t nsh = h.dom().backward().size();

  FnTable play = table_over(
      play_domain(strategies, dom), cod.forward(),
      [&](std::size_t p) {
        const std::size_t s = p / nx, x = p % nx;
        const std::size_t a = s / nh, b = s % nh;
        return g.play(a, x / nxh) * nyh + h.play(b, x % nxh);
      },
      "play table");
  FnTable coplay = table_over(
      coplay_domain(strategies, dom, cod), dom.backward(),
      [&](std::size_t p) {
        const std::size_t r = p % nr, sx = p / nr;
        const std::size_t s = sx / nx, x = sx % nx;
        const std::size_t a = s / nh, b = s % nh;
        return g.coplay(a, x / nxh, r / nrh) * nsh +
               h.coplay(b, x % nxh, r % nrh);
      },
      "coplay table");

  const bool trivial = g.always_in_equilibrium() && h.always_in_equilibrium();
  EquilibriumFn eq = [g, h, nh, nxh, nyg, nyh, nrh](
                         std::size_t x, std::span<const std::size_t> k,
                         std::size_t s, EvalMode mode) {
    if (nrh == 0) return false;
    const std::size_t a = s / nh, b = s % nh;
    const std::size_t x1 = x / nxh, x2 = x % nxh;
    const std::size_t y1 = g.play(a, x1);
    const std::size_t y2 = h.play(b, x2);
    if (!g.always_in_equilibrium()) {
      std::vector<std::size_t> left(nyg);
      for (std::size_t y = 0; y < nyg; ++y) left[y] = k[y * nyh + y2] / nrh;
      if (!g.is_equilibrium(x1, left, a, mode)) return false;
    }
    if (h.always_in_equilibrium()) return true;
    std::vector<std::size_t> right(nyh);
    for (std::size_t y = 0; y < nyh; ++y) right[y] = k[y1 * nyh + y] % nrh;
    return h.is_equilibrium(x2, right, b, mode);
  };
  return OpenGame(dom, cod, strategies, std::move(play), std::move(coplay),
                  std::move(eq), trivial);
}

OpenGame sym(const Boundary& a, const Boundary& b) {
  const Boundary dom = concat(a, b);
  const Boundary cod = concat(b, a);
  const std::size_t naf = a.forward().size(), nbf = b.forward().size();
  const std::size_t nab = a.backward().size(), nbb = b.backward().size();
  const std::size_t nr = cod.backward().size();
  FnTable view = FnTable::from_indices(
      dom.forward(), cod.forward(), [=](std::size_t x) {
        return (x % nbf) * naf + x / nbf;
      });
  FnTable update = FnTable::from_indices(
      product(dom.forward(), cod.backward()), dom.backward(),
      [=](std::size_t p) {
        const std::size_t r = p % nr;  // r = rb * |Ab| + ra
        return (r % nab) * nbb + r / nab;
      });
  return OpenGame::strategically_trivial(dom, cod, std::move(view),
                                         std::move(update));
}

void check_context(const OpenGame& g, const Context& ctx) {
  if (ctx.x >= g.dom().forward().size()) {
    throw TypeMismatch("context input is not an element of " +
                       g.dom().forward().name());
  }
  if (!same_elements(ctx.k.domain(), g.cod().forward()) ||
      !same_elements(ctx.k.codomain(), g.cod().backward())) {
    throw TypeMismatch("continuation must map " + g.cod().forward().name() +
                       " to " + g.cod().backward().name());
  }
}

SubsetTable nash(const OpenGame& g, const Context& ctx, EvalMode mode) {
  check_context(g, ctx);
  return SubsetTable(g.strategies(),
                     g.equilibrium_mask(ctx.x, ctx.k.images(), mode));
}

void for_each_context(
    const Boundary& dom, const Boundary& cod,
    const std::function<void(std::size_t, std::size_t,
                             std::span<const std::size_t>)>& visit) {
  const std::size_t nx = dom.forward().size();
  const std::size_t ny = cod.forward().size();
  const std::size_t nr = cod.backward().size();
  const std::size_t nk = saturating_pow(nr, ny);
  check_size(saturating_mul(nx, nk), "contexts of " + dom.to_string() +
                                         " -> " + cod.to_string());
  std::size_t index = 0;
  std::vector<std::size_t> k(ny, 0);
  for (std::size_t x = 0; x < nx; ++x) {
    std::fill(k.begin(), k.end(), 0);
    for (std::size_t i = 0; i < nk; ++i) {
      visit(index++, x, k);
      for (std::size_t d = ny; d-- > 0;) {
        if (++k[d] < nr) break;
        k[d] = 0;
      }
    }
  }
}

std::vector<Context> all_contexts(const OpenGame& g) {
  std::vector<Context> out;
  const FiniteSet& yf = g.cod().forward();
  const FiniteSet& rb = g.cod().backward();
  for_each_context(g.dom(), g.cod(),
                   [&](std::size_t, std::size_t x,
                       std::span<const std::size_t> k) {
                     out.push_back(Context{
                         x, FnTable(yf, rb, {k.begin(), k.end()})});
                   });
  return out;
}

}  // namespace og
