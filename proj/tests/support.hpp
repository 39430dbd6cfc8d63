#pragma once

#include <random>

#include "canonlift/equivalence.hpp"
#include "canonlift/lift.hpp"
#include "canonlift/moves.hpp"

namespace testsupport {

using namespace canonlift;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Freely reduced word of the given length over `gens` generators.
inline Word random_word(Rng& rng, int gens, std::size_t length) {
  Word w;
  while (w.size() < length) {
    Letter l = make_letter(uniform(rng, 0, gens - 1), coin(rng));
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

inline void insert_at(Component& c, std::size_t pos, const std::vector<Event>& run) {
  c.insert(c.begin() + static_cast<std::ptrdiff_t>(std::min(pos, c.size())), run.begin(), run.end());
}

// Valid diagram with edges, turns, kinks or cusps, a few crossings and, now and then, a ready-made
// bigon or triangle so that every move kind gets exercised.
inline Diagram random_diagram(Rng& rng, Mode mode, const Surface& s = Surface(2, 0), int max_components = 2) {
  Diagram d{s, mode, {}};
  const int nc = uniform(rng, 1, max_components);
  for (int c = 0; c < nc; ++c) {
    Component comp;
    const int n = uniform(rng, 2, 7);
    for (int i = 0; i < n; ++i) {
      switch (uniform(rng, 0, 3)) {
        case 0: comp.push_back(Event::edge(make_letter(uniform(rng, 0, s.generator_count() - 1), coin(rng)))); break;
        case 1: comp.push_back(Event::qturn(coin(rng, 0.7) ? 1 : -1)); break;
        case 2:
          if (mode == Mode::Smooth)
            comp.push_back(coin(rng) ? Event::kink_left() : Event::kink_right());
          else
            comp.push_back(coin(rng) ? Event::cusp_up() : Event::cusp_down());
          break;
        default: comp.push_back(Event::qturn(1)); break;
      }
    }
    d.components.push_back(std::move(comp));
  }
  int id = 1;
  auto place = [&](const std::vector<Event>& run) {
    auto& comp = d.components[static_cast<std::size_t>(uniform(rng, 0, nc - 1))];
    insert_at(comp, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(comp.size()))), run);
  };
  for (int k = uniform(rng, 0, 2); k > 0; --k, ++id) {
    place({Event::cross(id, 1)});
    place({Event::cross(id, 2)});
  }
  if (coin(rng, 0.4)) {  // bigon
    int a = id++, b = id++;
    place({Event::cross(a, 1), Event::cross(b, 1)});
    place(coin(rng) ? std::vector<Event>{Event::cross(b, 2), Event::cross(a, 2)}
                    : std::vector<Event>{Event::cross(a, 2), Event::cross(b, 2)});
  }
  if (coin(rng, 0.4)) {  // triangle
    int a = id++, b = id++, c = id++;
    place({Event::cross(a, 1), Event::cross(b, 1)});
    place({Event::cross(a, 2), Event::cross(c, 1)});
    place({Event::cross(b, 2), Event::cross(c, 2)});
  }
  if (coin(rng, 0.4)) {  // cancelling pair
    if (mode == Mode::Smooth)
      place({Event::kink_left(), Event::kink_right()});
    else
      place({Event::cusp_down(), Event::cusp_up()});
  }
  for (auto& comp : d.components) {
    std::int64_t q = 0;
    int cusps = 0;
    for (const Event& e : comp) {
      if (e.kind == EventKind::QTurn) q += e.value;
      if (e.kind == EventKind::CuspU) q += 2, ++cusps;
      if (e.kind == EventKind::CuspD) q -= 2, ++cusps;
    }
    if (cusps % 2) {
      comp.push_back(Event::cusp_up());
      q += 2;
    }
    while (((q % 4) + 4) % 4 != 0) {
      comp.push_back(Event::qturn(1));
      ++q;
    }
  }
  return d;
}

// Samples a kind uniformly among kinds with at least one site, then a site uniformly.
inline std::optional<MoveInstance> random_move(Rng& rng, const Diagram& d) {
  std::vector<MoveKind> kinds;
  std::vector<std::vector<MoveInstance>> sites;
  for (MoveKind k : {MoveKind::R2_insert, MoveKind::R2_remove, MoveKind::R3, MoveKind::KinkSlide, MoveKind::Stab,
                     MoveKind::Destab}) {
    auto ms = applicable_moves(d, {k});
    if (ms.empty()) continue;
    kinds.push_back(k);
    sites.push_back(std::move(ms));
  }
  if (kinds.empty()) return std::nullopt;
  auto& pick = sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kinds.size()) - 1))];
  return pick[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pick.size()) - 1))];
}

inline CircleBundle bundle_for(const Diagram& d) {
  return CircleBundle(d.surface, d.mode == Mode::Smooth ? BundleKind::UnitTangent : BundleKind::ProjectiveTangent);
}

}  // namespace testsupport
