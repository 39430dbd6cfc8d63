#include "canonlift/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "canonlift/errors.hpp"
#include "canonlift/surface_group.hpp"

namespace canonlift {

std::string to_string(EquivalenceVerdict::Kind k) {
  switch (k) {
    case EquivalenceVerdict::Kind::Equivalent: return "Equivalent";
    case EquivalenceVerdict::Kind::Distinguished: return "Distinguished";
    case EquivalenceVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::vector<LiftClass> lift_classes(const Diagram& d, const CircleBundle& bundle) {
  std::vector<LiftClass> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) out.push_back(lift_class(d, bundle, static_cast<int>(c)));
  return out;
}

Diagram replay(const Diagram& d1, const std::vector<MoveInstance>& certificate) {
  Diagram cur = d1;
  for (const auto& m : certificate)
    cur = apply_move(m.kind == MoveKind::Transvection ? cur : canonical_form(cur), m);
  return cur;
}

bool certificate_valid(const Diagram& d1, const Diagram& d2, const std::vector<MoveInstance>& certificate) {
  try {
    return isomorphic(replay(d1, certificate), d2);
  } catch (const Error&) {
    return false;
  }
}

namespace {

// A move from canonical diagram `from` whose canonical result is `to`.
std::optional<MoveInstance> find_step(const Diagram& from, const Diagram& to) {
  const std::string want = encode(to);
  const bool grow = std::accumulate(to.components.begin(), to.components.end(), std::size_t{0},
                                    [](std::size_t s, const Component& c) { return s + c.size(); }) >
                    std::accumulate(from.components.begin(), from.components.end(), std::size_t{0},
                                    [](std::size_t s, const Component& c) { return s + c.size(); });
  std::vector<MoveKind> kinds = grow ? std::vector<MoveKind>{MoveKind::Stab, MoveKind::R2_insert}
                                     : std::vector<MoveKind>{MoveKind::KinkSlide, MoveKind::R3, MoveKind::Destab,
                                                             MoveKind::R2_remove};
  for (const auto& m : applicable_moves(from, kinds))
    if (encode(canonical_form(apply_move(from, m))) == want) return m;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<MoveInstance>> reverse_certificate(const Diagram& d1,
                                                             const std::vector<MoveInstance>& certificate) {
  std::vector<Diagram> states{canonical_form(d1)};
  for (const auto& m : certificate) {
    if (m.kind == MoveKind::Transvection) return std::nullopt;
    states.push_back(canonical_form(apply_move(states.back(), m)));
  }
  std::vector<MoveInstance> out;
  for (std::size_t i = states.size() - 1; i > 0; --i) {
    auto step = find_step(states[i], states[i - 1]);
    if (!step) return std::nullopt;
    out.push_back(*step);
  }
  return out;
}

bool shift_reachable(const std::vector<std::vector<std::int64_t>>& shifts, const std::vector<std::int64_t>& delta,
                     std::int64_t modulus) {
  const std::size_t n = delta.size();
  if (n == 0) return true;
  std::vector<std::vector<std::int64_t>> cols = shifts;
  if (modulus != 0)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> c(n, 0);
      c[i] = modulus;
      cols.push_back(std::move(c));
    }
  if (cols.empty()) return std::all_of(delta.begin(), delta.end(), [](std::int64_t x) { return x == 0; });
  IntMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw DimensionMismatch("shift vector has the wrong length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  const SmithResult s = smith_normal_form(m);
  // m x = delta  <=>  D y = U delta with y = V^-1 x.
  for (std::size_t i = 0; i < n; ++i) {
    BigInt rhs = 0;
    for (std::size_t k = 0; k < n; ++k) rhs += s.u(i, k) * delta[k];
    const BigInt dii = i < cols.size() ? s.d(i, i) : BigInt(0);
    if (dii == 0) {
      if (rhs != 0) return false;
    } else if (rhs % dii != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<std::int64_t>> transvection_shifts(const Diagram& d, const Budget& budget) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& t : budget.transvections) {
    auto v = transvection_shift(t, d.components.size());
    // PT degrees count cusps, which already are the doubled turning.
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::string format_vector(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string format_lifts(const std::vector<LiftClass>& ls) {
  std::vector<std::string> parts;
  for (const auto& l : ls) parts.push_back(format_vector(l.base) + ":" + std::to_string(l.fiber));
  std::sort(parts.begin(), parts.end());
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  return s + "]";
}

std::string format_bases(const std::vector<LiftClass>& ls) {
  std::vector<std::string> parts;
  for (const auto& l : ls) parts.push_back(format_vector(l.base));
  std::sort(parts.begin(), parts.end());
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
  return s + "]";
}

constexpr std::size_t kMaxMatchedComponents = 8;

// Is there a bijection matching bases exactly with fibre differences in the reachable shift group?
// Returns nullopt if too many components to decide.
std::optional<bool> lifts_matchable(const std::vector<LiftClass>& a, const std::vector<LiftClass>& b,
                                    const std::vector<std::vector<std::int64_t>>& shifts, std::int64_t modulus) {
  const std::size_t n = a.size();
  if (n > kMaxMatchedComponents) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    std::vector<std::int64_t> delta(n);
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = a[i].base == b[perm[i]].base;
      delta[i] = b[perm[i]].fiber - a[i].fiber;
    }
    if (ok && shift_reachable(shifts, delta, modulus)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> lift_multiset(const std::vector<LiftClass>& ls) {
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> out;
  for (const auto& l : ls) out.push_back({l.base, l.fiber});
  std::sort(out.begin(), out.end());
  return out;
}

struct Node {
  Diagram d;
  std::string parent;  // empty for roots
  MoveInstance move;   // leads from parent to this node (forward side) or from this node to parent
  std::size_t depth = 0;
  bool has_move = false;
};

using Side = std::unordered_map<std::string, Node>;

struct Child {
  std::string key;
  Diagram d;
  MoveInstance move;
};

std::vector<Child> expand(const Diagram& d, const std::vector<MoveKind>& kinds) {
  std::vector<Child> out;
  for (auto& m : applicable_moves(d, kinds)) {
    Diagram c = canonical_form(apply_move(d, m));
    std::string k = encode(c);
    out.push_back({std::move(k), std::move(c), std::move(m)});
  }
  return out;
}

std::vector<std::vector<Child>> expand_all(const Side& side, const std::vector<std::string>& frontier,
                                           const std::vector<MoveKind>& kinds, unsigned threads) {
  std::vector<std::vector<Child>> out(frontier.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = expand(side.at(frontier[i]).d, kinds);
  };
  if (threads <= 1 || frontier.size() < 2) {
    work(0, frontier.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (frontier.size() + threads - 1) / threads;
    for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
      pool.emplace_back(work, lo, std::min(frontier.size(), lo + chunk));
    for (auto& t : pool) t.join();
  }
  return out;
}

class Search {
 public:
  Search(const Budget& budget, std::size_t& states) : budget_(budget), states_(states) {}

  void add_forward_root(const std::string& key, Node n) { add(fwd_, ffront_, key, std::move(n)); }
  void add_backward_root(const std::string& key, Node n) { add(bwd_, bfront_, key, std::move(n)); }

  // Returns the meeting key, or empty when the budget or the move limit runs out.
  //
  // With reversible moves the two sides share the level allowance (any path of length <= lf + lb
  // has a node at distance <= lf from one end and <= lb from the other). Shrinking-only moves are
  // not reversible, so then each side may descend max_moves levels on its own.
  std::string run(const std::vector<MoveKind>& kinds, bool downhill, std::size_t state_limit) {
    if (auto k = initial_meet(); !k.empty()) return k;
    std::size_t lf = 0, lb = 0;
    const std::size_t cap = budget_.max_moves;
    for (;;) {
      const bool f_open = !ffront_.empty() && (downhill ? lf < cap : lf + lb < cap);
      const bool b_open = !bfront_.empty() && (downhill ? lb < cap : lf + lb < cap);
      if (!f_open && !b_open) return {};
      const bool forward = f_open && (!b_open || ffront_.size() <= bfront_.size());
      Side& own = forward ? fwd_ : bwd_;
      Side& other = forward ? bwd_ : fwd_;
      auto& front = forward ? ffront_ : bfront_;
      std::sort(front.begin(), front.end());
      auto children = expand_all(own, front, kinds, budget_.threads);
      std::vector<std::string> next;
      std::string meet;
      for (std::size_t i = 0; i < front.size() && meet.empty(); ++i) {
        const Node& parent = own.at(front[i]);
        for (auto& ch : children[i]) {
          if (own.count(ch.key)) continue;
          if (states_ >= state_limit) {
            exhausted_ = true;
            return {};
          }
          Node n{std::move(ch.d), front[i], std::move(ch.move), parent.depth + 1, true};
          auto it = other.find(ch.key);
          const bool hit = it != other.end() && n.depth + it->second.depth <= budget_.max_moves;
          own.emplace(ch.key, std::move(n));
          ++states_;
          next.push_back(ch.key);
          if (hit) {
            meet = ch.key;
            break;
          }
        }
      }
      if (!meet.empty()) return meet;
      front = std::move(next);
      (forward ? lf : lb) += 1;
    }
  }

  bool exhausted() const { return exhausted_; }
  const Side& forward() const { return fwd_; }
  const Side& backward() const { return bwd_; }

 private:
  void add(Side& side, std::vector<std::string>& front, const std::string& key, Node n) {
    if (side.count(key)) return;
    side.emplace(key, std::move(n));
    front.push_back(key);
    ++states_;
  }

  std::string initial_meet() const {
    std::vector<std::string> keys;
    for (const auto& [k, n] : fwd_)
      if (auto it = bwd_.find(k); it != bwd_.end() && n.depth + it->second.depth <= budget_.max_moves) keys.push_back(k);
    if (keys.empty()) return {};
    return *std::min_element(keys.begin(), keys.end());
  }

  const Budget& budget_;
  std::size_t& states_;
  Side fwd_, bwd_;
  std::vector<std::string> ffront_, bfront_;
  bool exhausted_ = false;
};

std::vector<MoveInstance> assemble(const Search& s, const std::string& meet) {
  std::vector<MoveInstance> head;
  for (std::string k = meet;;) {
    const Node& n = s.forward().at(k);
    if (!n.has_move) break;
    head.push_back(n.move);
    if (n.parent.empty()) break;
    k = n.parent;
  }
  std::reverse(head.begin(), head.end());
  for (std::string k = meet;;) {
    const Node& n = s.backward().at(k);
    if (n.parent.empty()) break;
    auto step = find_step(n.d, s.backward().at(n.parent).d);
    if (!step) throw Error("internal: no inverse step while assembling a certificate");
    head.push_back(*step);
    k = n.parent;
  }
  return head;
}

// Multiplicity vectors with 1 <= sum |n_i| <= bound.
void multiplicities(std::size_t gens, std::int64_t bound, std::vector<std::vector<std::int64_t>>& out,
                    std::vector<std::int64_t>& cur, std::int64_t used, std::size_t cap) {
  if (out.size() >= cap) return;
  if (cur.size() == gens) {
    if (used > 0) out.push_back(cur);
    return;
  }
  for (std::int64_t v = -(bound - used); v <= bound - used; ++v) {
    cur.push_back(v);
    multiplicities(gens, bound, out, cur, used + (v < 0 ? -v : v), cap);
    cur.pop_back();
  }
}

constexpr std::size_t kMaxTransvectionRoots = 2000;

}  // namespace

EquivalenceVerdict equivalent_bounded(const Diagram& d1, const Diagram& d2, const CircleBundle& bundle,
                                      const Budget& budget) {
  if (!(d1.surface == d2.surface) || d1.mode != d2.mode)
    throw ModeMismatch("diagrams live on different surfaces or in different modes");
  require_compatible(d1, bundle);
  require_euler_char_below(d1.surface, 0, "equivalence search");

  using K = EquivalenceVerdict::Kind;
  EquivalenceVerdict v;
  if (d1.components.size() != d2.components.size()) {
    v.kind = K::Distinguished;
    v.invariant = "component_count";
    v.values1 = std::to_string(d1.components.size());
    v.values2 = std::to_string(d2.components.size());
    return v;
  }
  const auto l1 = lift_classes(d1, bundle), l2 = lift_classes(d2, bundle);
  {
    auto b1 = format_bases(l1), b2 = format_bases(l2);
    if (b1 != b2) {
      v.kind = K::Distinguished;
      v.invariant = "shadow_homology";
      v.values1 = b1;
      v.values2 = b2;
      return v;
    }
  }
  const auto shifts = transvection_shifts(d1, budget);
  if (auto ok = lifts_matchable(l1, l2, shifts, bundle.euler_abs()); ok && !*ok) {
    v.kind = K::Distinguished;
    v.invariant = "lift_class";
    v.values1 = format_lifts(l1);
    v.values2 = format_lifts(l2);
    return v;
  }

  const auto target_lifts = lift_multiset(l2);
  std::size_t states = 0;
  auto seed = [&](Search& s) {
    const Diagram c1 = canonical_form(d1);
    if (lift_multiset(l1) == target_lifts) s.add_forward_root(encode(c1), Node{c1, "", {}, 0, false});
    if (!budget.transvections.empty() && budget.max_moves > 0) {
      std::vector<std::vector<std::int64_t>> mults;
      std::vector<std::int64_t> cur;
      multiplicities(budget.transvections.size(), static_cast<std::int64_t>(budget.max_moves), mults, cur, 0,
                     kMaxTransvectionRoots);
      for (const auto& n : mults) {
        MoveInstance t;
        t.kind = MoveKind::Transvection;
        for (std::size_t g = 0; g < n.size(); ++g) {
          if (n[g] == 0) continue;
          for (auto tc : budget.transvections[g]) {
            tc.weight *= n[g];
            t.curve.push_back(std::move(tc));
          }
        }
        Diagram td;
        try {
          td = apply_move(d1, t);
        } catch (const InapplicableMove&) {
          continue;
        }
        if (lift_multiset(lift_classes(td, bundle)) != target_lifts) continue;
        Diagram c = canonical_form(td);
        std::string key = encode(c);
        s.add_forward_root(key, Node{std::move(c), "", std::move(t), 1, true});
      }
    }
    const Diagram c2 = canonical_form(d2);
    s.add_backward_root(encode(c2), Node{c2, "", {}, 0, false});
  };

  auto attempt = [&](const std::vector<MoveKind>& kinds, bool downhill,
                     std::size_t limit) -> std::optional<std::vector<MoveInstance>> {
    Search s(budget, states);
    seed(s);
    std::string meet = s.run(kinds, downhill, limit);
    if (meet.empty()) return std::nullopt;
    return assemble(s, meet);
  };

  // Descend from both ends first; most short certificates only need non-growing moves there.
  // That phase gets a quarter of the state budget so the full search keeps most of it.
  std::optional<std::vector<MoveInstance>> cert =
      attempt({MoveKind::R2_remove, MoveKind::Destab, MoveKind::R3, MoveKind::KinkSlide}, true,
              budget.max_states / 4);
  if (!cert && states < budget.max_states)
    cert = attempt({MoveKind::R2_insert, MoveKind::R2_remove, MoveKind::R3, MoveKind::KinkSlide, MoveKind::Stab,
                    MoveKind::Destab},
                   false, budget.max_states);
  v.states = states;
  if (cert) {
    if (!certificate_valid(d1, d2, *cert)) throw Error("internal: assembled certificate does not replay");
    v.kind = K::Equivalent;
    v.certificate = std::move(*cert);
    return v;
  }
  v.kind = K::Unknown;
  return v;
}

Diagram relabel_generators(const Diagram& d, const Relabeling& image) {
  const int n = d.surface.generator_count();
  for (const auto& [g, w] : image) {
    if (g < 0 || g >= n) throw Error("relabeling names an unknown generator");
    for (Letter l : w)
      if (l == 0 || generator_of(l) >= n) throw Error("relabeling image uses an unknown generator");
  }
  auto img = [&](Letter l) -> Word {
    auto it = image.find(generator_of(l));
    if (it == image.end()) return {l};
    return is_inverse(l) ? inverse(it->second) : it->second;
  };
  if (d.surface.closed() && d.surface.genus() >= 2) {
    Word r;
    for (Letter l : d.surface.boundary_word()) {
      auto w = img(l);
      r.insert(r.end(), w.begin(), w.end());
    }
    if (!is_trivial(r, d.surface)) throw Error("relabeling does not send the surface relator to the identity");
  }
  Diagram out{d.surface, d.mode, {}};
  for (const auto& comp : d.components) {
    Component c;
    for (const Event& e : comp) {
      if (e.kind != EventKind::Edge) {
        c.push_back(e);
        continue;
      }
      for (Letter l : img(e.value)) c.push_back(Event::edge(l));
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace canonlift
