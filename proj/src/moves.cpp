#include "canonlift/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "canonlift/errors.hpp"

namespace canonlift {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R2_insert: return "R2_insert";
    case MoveKind::R2_remove: return "R2_remove";
    case MoveKind::R3: return "R3";
    case MoveKind::KinkSlide: return "KinkSlide";
    case MoveKind::Stab: return "Stab";
    case MoveKind::Destab: return "Destab";
    case MoveKind::Transvection: return "Transvection";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::R2_insert, MoveKind::R2_remove, MoveKind::R3, MoveKind::KinkSlide, MoveKind::Stab,
                     MoveKind::Destab, MoveKind::Transvection})
    if (to_string(k) == s) return k;
  throw Error("unknown move kind '" + s + "'");
}

std::string describe(const MoveInstance& m) {
  std::ostringstream os;
  os << to_string(m.kind);
  if (!m.site.empty()) {
    os << " [";
    for (std::size_t i = 0; i < m.site.size(); ++i) os << (i ? "," : "") << m.site[i];
    os << "]";
  }
  if (m.kind == MoveKind::R2_insert) os << (m.parallel ? " parallel" : " antiparallel");
  if (m.kind == MoveKind::Stab) os << (m.sign > 0 ? " +" : " -");
  if (m.kind == MoveKind::Transvection) os << " (" << m.curve.size() << " curves)";
  return os.str();
}

bool is_non_growing(MoveKind k) {
  return k == MoveKind::R2_remove || k == MoveKind::R3 || k == MoveKind::KinkSlide || k == MoveKind::Destab;
}

namespace {

using Pos = std::pair<int, int>;  // (component, index)

std::size_t len(const Diagram& d, int c) { return d.components[static_cast<std::size_t>(c)].size(); }

const Event& at(const Diagram& d, int c, std::size_t i) {
  const auto& comp = d.components[static_cast<std::size_t>(c)];
  return comp[i % comp.size()];
}

bool valid_component(const Diagram& d, int c) { return c >= 0 && static_cast<std::size_t>(c) < d.components.size(); }

bool opposite_pair(const Event& x, const Event& y, Mode mode) {
  if (mode == Mode::Smooth)
    return (x.kind == EventKind::KinkL && y.kind == EventKind::KinkR) ||
           (x.kind == EventKind::KinkR && y.kind == EventKind::KinkL);
  return (x.kind == EventKind::CuspU && y.kind == EventKind::CuspD) ||
         (x.kind == EventKind::CuspD && y.kind == EventKind::CuspU);
}

bool slidable(const Event& x, const Event& y) {
  auto other = [](const Event& e) { return e.kind == EventKind::Cross || e.kind == EventKind::Edge; };
  return (x.is_loop_like() && other(y)) || (other(x) && y.is_loop_like());
}

// Crossing pair starting at (c, i): both events crossings with distinct ids and the component
// long enough for the two positions to differ.
bool cross_pair(const Diagram& d, int c, int i, int& x, int& y) {
  std::size_t n = len(d, c);
  if (n < 2) return false;
  const Event& e1 = at(d, c, static_cast<std::size_t>(i));
  const Event& e2 = at(d, c, static_cast<std::size_t>(i) + 1);
  if (e1.kind != EventKind::Cross || e2.kind != EventKind::Cross || e1.value == e2.value) return false;
  x = e1.value;
  y = e2.value;
  return true;
}

std::set<Pos> pair_positions(const Diagram& d, int c, int i) {
  std::size_t n = len(d, c);
  return {{c, i}, {c, static_cast<int>((static_cast<std::size_t>(i) + 1) % n)}};
}

bool disjoint_pairs(const Diagram& d, const std::vector<Pos>& starts) {
  std::set<Pos> seen;
  for (auto [c, i] : starts)
    for (const Pos& p : pair_positions(d, c, i))
      if (!seen.insert(p).second) return false;
  return true;
}

std::set<int> ids_of(int x, int y) { return {x, y}; }

bool is_bigon(const Diagram& d, int c1, int i1, int c2, int i2) {
  int x1, y1, x2, y2;
  if (!cross_pair(d, c1, i1, x1, y1) || !cross_pair(d, c2, i2, x2, y2)) return false;
  if (ids_of(x1, y1) != ids_of(x2, y2)) return false;
  return disjoint_pairs(d, {{c1, i1}, {c2, i2}});
}

bool is_triangle(const Diagram& d, const std::vector<Pos>& p) {
  std::vector<std::set<int>> ids;
  for (auto [c, i] : p) {
    int x, y;
    if (!cross_pair(d, c, i, x, y)) return false;
    ids.push_back(ids_of(x, y));
  }
  std::set<int> all;
  for (const auto& s : ids) all.insert(s.begin(), s.end());
  if (all.size() != 3 || ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2]) return false;
  return disjoint_pairs(d, p);
}

// Gap positions: one per event, plus a single gap for an empty component.
std::vector<Pos> gaps(const Diagram& d) {
  std::vector<Pos> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    std::size_t n = std::max<std::size_t>(1, d.components[c].size());
    for (std::size_t g = 0; g < n; ++g) out.push_back({static_cast<int>(c), static_cast<int>(g)});
  }
  return out;
}

MoveInstance mv(MoveKind k, std::vector<int> site) {
  MoveInstance m;
  m.kind = k;
  m.site = std::move(site);
  return m;
}

void require(bool ok, const MoveInstance& m, const std::string& why) {
  if (!ok) throw InapplicableMove(describe(m) + ": " + why);
}

void require_site(const Diagram& d, const MoveInstance& m, std::size_t arity) {
  require(m.site.size() == arity, m, "site needs " + std::to_string(arity) + " entries");
  for (std::size_t k = 0; k < arity; k += 2) {
    require(valid_component(d, m.site[k]), m, "no such component");
    require(m.site[k + 1] >= 0, m, "negative index");
  }
}

void require_index(const Diagram& d, const MoveInstance& m, int c, int i) {
  require(static_cast<std::size_t>(i) < len(d, c), m, "index out of range");
}

void require_gap(const Diagram& d, const MoveInstance& m, int c, int g) {
  require(static_cast<std::size_t>(g) <= len(d, c), m, "gap out of range");
}

// Insert several event runs into the components; positions refer to the original diagram.
// Runs aimed at the same gap go in in the order given.
Diagram insert_runs(const Diagram& d, std::vector<std::tuple<int, int, std::vector<Event>>> runs) {
  std::stable_sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
    return std::pair(std::get<0>(a), std::get<1>(a)) < std::pair(std::get<0>(b), std::get<1>(b));
  });
  std::vector<std::tuple<int, int, std::vector<Event>>> merged;
  for (auto& r : runs) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(r) && std::get<1>(merged.back()) == std::get<1>(r)) {
      auto& ev = std::get<2>(merged.back());
      ev.insert(ev.end(), std::get<2>(r).begin(), std::get<2>(r).end());
    } else {
      merged.push_back(std::move(r));
    }
  }
  Diagram out = d;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    auto& comp = out.components[static_cast<std::size_t>(std::get<0>(*it))];
    const auto& ev = std::get<2>(*it);
    comp.insert(comp.begin() + std::get<1>(*it), ev.begin(), ev.end());
  }
  return out;
}

Diagram erase_positions(const Diagram& d, const std::set<Pos>& pos) {
  Diagram out = d;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    auto& comp = out.components[static_cast<std::size_t>(it->first)];
    comp.erase(comp.begin() + it->second);
  }
  return out;
}

void swap_pair(Diagram& d, int c, int i) {
  auto& comp = d.components[static_cast<std::size_t>(c)];
  std::size_t a = static_cast<std::size_t>(i), b = (a + 1) % comp.size();
  std::swap(comp[a], comp[b]);
}

Diagram apply_transvection(const Diagram& d, const MoveInstance& m) {
  require(!m.curve.empty(), m, "empty multicurve");
  std::vector<std::tuple<int, int, std::vector<Event>>> runs;
  for (const auto& tc : m.curve) {
    require(tc.weight != 0, m, "weights must be nonzero");
    for (Letter l : tc.word)
      require(l != 0 && generator_of(l) < d.surface.generator_count(), m, "curve uses an unknown generator");
    require(is_freely_reduced(tc.word), m, "curve word must be reduced");
    for (const auto& s : tc.sites) {
      if (!valid_component(d, s.component) || s.gap < 0 || static_cast<std::size_t>(s.gap) > len(d, s.component))
        throw MissingReference("transvection site " + std::to_string(s.component) + ":" + std::to_string(s.gap) +
                               " is not in the diagram");
      require(s.sign == 1 || s.sign == -1, m, "site signs are +1 or -1");
      std::int64_t n = tc.weight * s.sign;
      std::vector<Event> ev;
      for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) {
        if (d.mode == Mode::Smooth)
          ev.push_back(n > 0 ? Event::kink_left() : Event::kink_right());
        else
          ev.push_back(n > 0 ? Event::cusp_up() : Event::cusp_down());
      }
      runs.emplace_back(s.component, s.gap, std::move(ev));
    }
  }
  Diagram out = insert_runs(d, std::move(runs));
  if (out.mode == Mode::CuspSmooth)
    for (const auto& comp : out.components) {
      auto cusps = std::count_if(comp.begin(), comp.end(), [](const Event& e) { return e.is_cusp(); });
      require(cusps % 2 == 0, m, "leaves a component with an odd number of cusps");
    }
  return out;
}

}  // namespace

std::vector<MoveInstance> applicable_moves(const Diagram& d, const std::vector<MoveKind>& kinds) {
  auto wanted = [&](MoveKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  std::vector<MoveInstance> out;
  const int nc = static_cast<int>(d.components.size());

  if (wanted(MoveKind::R2_insert)) {
    auto gs = gaps(d);
    for (std::size_t p = 0; p < gs.size(); ++p)
      for (std::size_t q = p; q < gs.size(); ++q)  // q == p: both strands of one run
        for (bool par : {false, true}) {
          MoveInstance m = mv(MoveKind::R2_insert, {gs[p].first, gs[p].second, gs[q].first, gs[q].second});
          m.parallel = par;
          out.push_back(std::move(m));
        }
  }

  // Adjacent crossing pairs, listed once per starting index.
  std::vector<Pos> pairs;
  for (int c = 0; c < nc; ++c)
    for (int i = 0; static_cast<std::size_t>(i) < len(d, c); ++i) {
      int x, y;
      if (cross_pair(d, c, i, x, y) && !(len(d, c) == 2 && i == 1)) pairs.push_back({c, i});
    }

  if (wanted(MoveKind::R2_remove))
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = p + 1; q < pairs.size(); ++q)
        if (is_bigon(d, pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second))
          out.push_back(mv(MoveKind::R2_remove, {pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second}));

  if (wanted(MoveKind::R3))
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = p + 1; q < pairs.size(); ++q)
        for (std::size_t r = q + 1; r < pairs.size(); ++r)
          if (is_triangle(d, {pairs[p], pairs[q], pairs[r]}))
            out.push_back(mv(MoveKind::R3, {pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second,
                                          pairs[r].first, pairs[r].second}));

  if (wanted(MoveKind::KinkSlide))
    for (int c = 0; c < nc; ++c) {
      std::size_t n = len(d, c);
      if (n < 2) continue;
      for (std::size_t i = 0; i < (n == 2 ? 1 : n); ++i)
        if (slidable(at(d, c, i), at(d, c, i + 1))) out.push_back(mv(MoveKind::KinkSlide, {c, static_cast<int>(i)}));
    }

  if (wanted(MoveKind::Stab))
    for (auto [c, g] : gaps(d))
      for (int s : {1, -1}) {
        MoveInstance m = mv(MoveKind::Stab, {c, g});
        m.sign = s;
        out.push_back(std::move(m));
      }

  if (wanted(MoveKind::Destab))
    for (int c = 0; c < nc; ++c) {
      std::size_t n = len(d, c);
      if (n < 2) continue;
      for (std::size_t i = 0; i < (n == 2 ? 1 : n); ++i)
        if (opposite_pair(at(d, c, i), at(d, c, i + 1), d.mode)) out.push_back(mv(MoveKind::Destab, {c, static_cast<int>(i)}));
    }
  return out;
}

std::vector<MoveInstance> applicable_moves(const Diagram& d) {
  return applicable_moves(d, {MoveKind::R2_insert, MoveKind::R2_remove, MoveKind::R3, MoveKind::KinkSlide,
                              MoveKind::Stab, MoveKind::Destab});
}

Diagram apply_move(const Diagram& d, const MoveInstance& m) {
  switch (m.kind) {
    case MoveKind::R2_insert: {
      require_site(d, m, 4);
      const auto& s = m.site;
      require_gap(d, m, s[0], s[1]);
      require_gap(d, m, s[2], s[3]);
      const int a = next_crossing_id(d), b = a + 1;
      std::vector<Event> first{Event::cross(a, 1), Event::cross(b, 1)};
      std::vector<Event> second = m.parallel ? std::vector<Event>{Event::cross(a, 2), Event::cross(b, 2)}
                                             : std::vector<Event>{Event::cross(b, 2), Event::cross(a, 2)};
      return insert_runs(d, {{s[0], s[1], first}, {s[2], s[3], second}});
    }
    case MoveKind::R2_remove: {
      require_site(d, m, 4);
      const auto& s = m.site;
      require_index(d, m, s[0], s[1]);
      require_index(d, m, s[2], s[3]);
      require(is_bigon(d, s[0], s[1], s[2], s[3]), m, "no bigon at the site");
      auto pos = pair_positions(d, s[0], s[1]);
      pos.merge(pair_positions(d, s[2], s[3]));
      return erase_positions(d, pos);
    }
    case MoveKind::R3: {
      require_site(d, m, 6);
      const auto& s = m.site;
      for (int k = 0; k < 6; k += 2) require_index(d, m, s[k], s[k + 1]);
      require(is_triangle(d, {{s[0], s[1]}, {s[2], s[3]}, {s[4], s[5]}}), m, "no triangle at the site");
      Diagram out = d;
      for (int k = 0; k < 6; k += 2) swap_pair(out, s[k], s[k + 1]);
      return out;
    }
    case MoveKind::KinkSlide: {
      require_site(d, m, 2);
      require_index(d, m, m.site[0], m.site[1]);
      require(len(d, m.site[0]) >= 2, m, "component too short");
      auto i = static_cast<std::size_t>(m.site[1]);
      require(slidable(at(d, m.site[0], i), at(d, m.site[0], i + 1)), m,
              "needs a kink or cusp next to a crossing or edge");
      Diagram out = d;
      swap_pair(out, m.site[0], m.site[1]);
      return out;
    }
    case MoveKind::Stab: {
      require_site(d, m, 2);
      require_gap(d, m, m.site[0], m.site[1]);
      require(m.sign == 1 || m.sign == -1, m, "sign must be +1 or -1");
      Event up = d.mode == Mode::Smooth ? Event::kink_left() : Event::cusp_up();
      Event down = d.mode == Mode::Smooth ? Event::kink_right() : Event::cusp_down();
      std::vector<Event> run = m.sign > 0 ? std::vector<Event>{up, down} : std::vector<Event>{down, up};
      return insert_runs(d, {{m.site[0], m.site[1], run}});
    }
    case MoveKind::Destab: {
      require_site(d, m, 2);
      require_index(d, m, m.site[0], m.site[1]);
      require(len(d, m.site[0]) >= 2, m, "component too short");
      auto i = static_cast<std::size_t>(m.site[1]);
      require(opposite_pair(at(d, m.site[0], i), at(d, m.site[0], i + 1), d.mode), m,
              d.mode == Mode::Smooth ? "needs adjacent L+ L- kinks" : "needs adjacent C^ Cv cusps");
      return erase_positions(d, pair_positions(d, m.site[0], m.site[1]));
    }
    case MoveKind::Transvection:
      return apply_transvection(d, m);
  }
  throw InapplicableMove("unknown move");
}

Diagram expand_kink(const Diagram& d, int component, int index) {
  if (!valid_component(d, component) || index < 0 || static_cast<std::size_t>(index) >= len(d, component))
    throw InapplicableMove("no event at " + std::to_string(component) + ":" + std::to_string(index));
  const Event& e = at(d, component, static_cast<std::size_t>(index));
  if (!e.is_kink()) throw InapplicableMove("expand_kink needs a kink (cusps have no crossing form)");
  const int id = next_crossing_id(d);
  const int sign = e.kind == EventKind::KinkL ? 1 : -1;
  Diagram out = d;
  auto& comp = out.components[static_cast<std::size_t>(component)];
  std::vector<Event> run{Event::cross(id, 1)};
  for (int k = 0; k < 4; ++k) run.push_back(Event::qturn(sign));
  run.push_back(Event::cross(id, 2));
  comp.erase(comp.begin() + index);
  comp.insert(comp.begin() + index, run.begin(), run.end());
  return out;
}

Diagram contract_kink(const Diagram& d, int component, int index) {
  if (!valid_component(d, component) || index < 0 || static_cast<std::size_t>(index) >= len(d, component) ||
      len(d, component) < 6)
    throw InapplicableMove("no expanded kink at " + std::to_string(component) + ":" + std::to_string(index));
  const auto n = len(d, component);
  const auto i = static_cast<std::size_t>(index);
  const Event& x1 = at(d, component, i);
  const Event& x2 = at(d, component, i + 5);
  bool ok = x1.kind == EventKind::Cross && x2.kind == EventKind::Cross && x1.value == x2.value;
  const int sign = at(d, component, i + 1).kind == EventKind::QTurn ? at(d, component, i + 1).value : 0;
  for (std::size_t k = 1; k <= 4 && ok; ++k) {
    const Event& q = at(d, component, i + k);
    ok = q.kind == EventKind::QTurn && q.value == sign;
  }
  if (!ok) throw InapplicableMove("no expanded kink at " + std::to_string(component) + ":" + std::to_string(index));
  std::set<Pos> pos;
  for (std::size_t k = 0; k < 6; ++k) pos.insert({component, static_cast<int>((i + k) % n)});
  Diagram out = erase_positions(d, pos);
  // The kink sits where the first crossing visit was (or at the start if the run wrapped around).
  auto& comp = out.components[static_cast<std::size_t>(component)];
  std::size_t wrapped = (i + 6 > n) ? (i + 6 - n) : 0;
  std::size_t where = wrapped ? i - wrapped : i;
  comp.insert(comp.begin() + static_cast<std::ptrdiff_t>(where), sign > 0 ? Event::kink_left() : Event::kink_right());
  return out;
}

std::vector<std::int64_t> transvection_shift(const WeightedMulticurve& curve, std::size_t component_count) {
  std::vector<std::int64_t> out(component_count, 0);
  for (const auto& tc : curve)
    for (const auto& s : tc.sites)
      if (s.component >= 0 && static_cast<std::size_t>(s.component) < component_count)
        out[static_cast<std::size_t>(s.component)] += tc.weight * s.sign;
  return out;
}

}  // namespace canonlift
