#include "opengames/search.hpp"

#include <map>
#include <unordered_set>

#include "opengames/generators.hpp"
#include "opengames/parallel.hpp"
#include "opengames/size_guard.hpp"

namespace og {

namespace {

FiniteSet carrier(std::size_t n) { return FiniteSet::range("B", n); }

std::string function_name(const FnTable& f) {
  std::string name = "f";
  for (std::size_t i : f.images()) name += std::to_string(i);
  return name;
}

std::size_t wire_count(const OpenGame& g) {
  return g.dom().wires().size() + g.cod().wires().size();
}

std::size_t contexts_between(const Boundary& dom, const Boundary& cod) {
  return saturating_mul(dom.forward().size(),
                        saturating_pow(cod.backward().size(),
                                       cod.forward().size()));
}

struct Candidate {
  std::size_t left;
  std::size_t right;
  bool seq;
};

struct Built {
  std::optional<Term> term;
  std::string key;
};

}  // namespace

std::string term_preamble(std::size_t set_size) {
  std::string out = "set B = {";
  for (std::size_t i = 0; i < set_size; ++i) {
    out += (i ? ", " : "") + std::to_string(i);
  }
  out += "};\n";
  const FiniteSet b = carrier(set_size);
  if (set_size == 0) return out;
  for (const FnTable& f : enumerate_functions(b, b)) {
    out += "fun " + function_name(f) + " : B -> B = {";
    for (std::size_t i = 0; i < set_size; ++i) {
      out += (i ? ", " : "") + std::to_string(i) + " -> " +
             std::to_string(f(i));
    }
    out += "};\n";
  }
  return out;
}

std::vector<Term> atom_terms(std::size_t set_size) {
  const FiniteSet b = carrier(set_size);
  const FiniteSet one = FiniteSet::unit();
  const Boundary bp = Boundary::covariant(b);
  const Boundary bm = Boundary::contravariant(b);
  std::vector<Term> out;
  auto add = [&](std::string text, OpenGame g) {
    out.push_back(Term{std::move(text), std::move(g), 0});
  };
  add("id([])", identity(Boundary()));
  add("id([B+])", identity(bp));
  add("id([B-])", identity(bm));
  add("sym([B+], [B+])", sym(bp, bp));
  add("sym([B+], [B-])", sym(bp, bm));
  add("sym([B-], [B+])", sym(bm, bp));
  add("sym([B-], [B-])", sym(bm, bm));
  add("counit(B)", counit(b));
  add("eta(B)", eta(b));
  if (set_size > 0) {
    for (const FnTable& f : enumerate_functions(b, b)) {
      add("liftF(" + function_name(f) + ")", lift_forward(f));
    }
    for (const FnTable& f : enumerate_functions(b, b)) {
      add("liftB(" + function_name(f) + ")", lift_backward(f));
    }
  }
  add("copyF(B)", black(BlackKind::copy_forward, b));
  add("delF(B)", black(BlackKind::delete_forward, b));
  add("copyB(B)", black(BlackKind::copy_backward, b));
  add("delB(B)", black(BlackKind::delete_backward, b));
  add("mergeF(B)", white(WhiteKind::merge_forward, b));
  add("spawnF(B)", white(WhiteKind::spawn_forward, b));
  add("mergeB(B)", white(WhiteKind::merge_backward, b));
  add("spawnB(B)", white(WhiteKind::spawn_backward, b));
  add("triR(B)", snake(SnakeKind::right, b, SnakeForm::normal));
  add("triL(B)", snake(SnakeKind::left, b, SnakeForm::normal));
  if (set_size > 0) {
    add("agent(argmax, 1, B, B)", agent(argmax_selection(b, b), one));
    add("agent(argmax, B, B, B)", agent(argmax_selection(b, b), b));
    add("agent(fix, B, B, B)", agent(fix_selection(b), b));
    add("agent(const(0), 1, B, B)", agent(const_selection(b, b, 0), one));
  }
  return out;
}

std::vector<Term> enumerate_terms(int depth, std::size_t set_size,
                                  const TermLimits& limits, unsigned threads) {
  std::vector<Term> terms;
  std::unordered_set<std::string> seen;
  auto admit = [&](const OpenGame& g) {
    return wire_count(g) <= limits.max_wires &&
           g.strategies().size() <= limits.max_strategies &&
           g.context_count() <= limits.max_contexts;
  };
  for (Term& t : atom_terms(set_size)) {
    if (!admit(t.game)) continue;
    if (seen.insert(Profile(t.game).iso_key()).second) {
      terms.push_back(std::move(t));
    }
  }
  std::size_t previous_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t known = terms.size();
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < known; ++i) {
      for (std::size_t j = 0; j < known; ++j) {
        if (i < previous_begin && j < previous_begin) continue;
        const OpenGame& a = terms[i].game;
        const OpenGame& b = terms[j].game;
        if (a.cod() == b.dom() &&
            saturating_mul(a.strategies().size(), b.strategies().size()) <=
                limits.max_strategies &&
            a.dom().wires().size() + b.cod().wires().size() <=
                limits.max_wires &&
            contexts_between(a.dom(), b.cod()) <= limits.max_contexts) {
          candidates.push_back({i, j, true});
        }
        const Boundary dom = concat(a.dom(), b.dom());
        const Boundary cod = concat(a.cod(), b.cod());
        if (wire_count(a) + wire_count(b) <= limits.max_wires &&
            saturating_mul(a.strategies().size(), b.strategies().size()) <=
                limits.max_strategies &&
            contexts_between(dom, cod) <= limits.max_contexts) {
          candidates.push_back({i, j, false});
        }
      }
    }
    std::vector<Built> built(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t c) {
      const Candidate& cand = candidates[c];
      const Term& a = terms[cand.left];
      const Term& b = terms[cand.right];
      OpenGame g = cand.seq ? compose(a.game, b.game) : tensor(a.game, b.game);
      built[c].key = Profile(g).iso_key();
      built[c].term = Term{"(" + a.text + (cand.seq ? " >> " : " * ") +
                               b.text + ")",
                           std::move(g), d};
    });
    previous_begin = known;
    for (Built& b : built) {
      if (terms.size() >= limits.max_terms) break;
      if (seen.insert(b.key).second) terms.push_back(std::move(*b.term));
    }
  }
  return terms;
}

SimSearchResult sim_compositionality_search(int max_depth, std::size_t set_size,
                                            const TermLimits& limits,
                                            unsigned threads) {
  SimSearchResult result;
  result.max_depth = max_depth;
  result.set_size = set_size;
  result.limits = limits;
  for (int d = 0; d <= max_depth; ++d) {
    result.depth_reached = d;
    const std::vector<Term> terms =
        enumerate_terms(d, set_size, limits, threads);
    result.terms_per_depth.push_back(terms.size());

    std::vector<std::vector<std::size_t>> signatures(terms.size());
    parallel_for(terms.size(), threads, [&](std::size_t i) {
      signatures[i] = sim_signature(terms[i].game);
    });

    // ~-classes per boundary pair, classes and members in generation order.
    struct Classes {
      std::map<std::vector<std::size_t>, std::size_t> index;
      std::vector<std::vector<std::size_t>> members;
    };
    std::map<std::pair<std::string, std::string>, Classes> by_type;
    std::vector<std::pair<std::string, std::string>> type_order;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto type = std::make_pair(terms[i].game.dom().to_string(),
                                       terms[i].game.cod().to_string());
      auto [it, fresh] = by_type.try_emplace(type);
      if (fresh) type_order.push_back(type);
      Classes& cls = it->second;
      auto [slot, added] =
          cls.index.try_emplace(signatures[i], cls.members.size());
      if (added) cls.members.emplace_back();
      cls.members[slot->second].push_back(i);
    }

    struct Job {
      const std::vector<std::size_t>* gs;
      const std::vector<std::size_t>* hs;
    };
    std::vector<Job> jobs;
    for (const auto& left_type : type_order) {
      for (const auto& right_type : type_order) {
        if (left_type.second != right_type.first) continue;
        const Classes& lc = by_type.at(left_type);
        const Classes& rc = by_type.at(right_type);
        for (const auto& gs : lc.members) {
          for (const auto& hs : rc.members) {
            if (gs.size() < 2 && hs.size() < 2) continue;
            const OpenGame& g0 = terms[gs[0]].game;
            const OpenGame& h0 = terms[hs[0]].game;
            if (!(g0.cod() == h0.dom())) continue;
            jobs.push_back({&gs, &hs});
          }
        }
      }
    }

    // Each job reports the first (G', H') whose composite leaves the class
    // of G0 >> H0.
    struct Hit {
      std::size_t g2 = 0;
      std::size_t h2 = 0;
      std::size_t checked = 0;
      bool found = false;
    };
    std::vector<Hit> hits(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t j) {
      const auto& gs = *jobs[j].gs;
      const auto& hs = *jobs[j].hs;
      Hit& hit = hits[j];
      const auto reference = sim_signature(
          compose(terms[gs[0]].game, terms[hs[0]].game));
      ++hit.checked;
      for (std::size_t a : gs) {
        for (std::size_t b : hs) {
          if (a == gs[0] && b == hs[0]) continue;
          ++hit.checked;
          if (sim_signature(compose(terms[a].game, terms[b].game)) !=
              reference) {
            hit = Hit{a, b, hit.checked, true};
            return;
          }
        }
      }
    });
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      result.composites_checked += hits[j].checked;
      if (!hits[j].found) continue;
      SimCounterexample cx{terms[(*jobs[j].gs)[0]], terms[hits[j].g2],
                           terms[(*jobs[j].hs)[0]], terms[hits[j].h2],
                           {}, {}, {}, false};
      cx.left = sim_check(cx.g.game, cx.g2.game);
      cx.right = sim_check(cx.h.game, cx.h2.game);
      cx.composite = sim_check(compose(cx.g.game, cx.h.game),
                               compose(cx.g2.game, cx.h2.game));
      cx.verified = cx.left.pass && cx.right.pass && !cx.composite.pass;
      result.counterexample = std::move(cx);
      return result;
    }
  }
  return result;
}

}  // namespace og
