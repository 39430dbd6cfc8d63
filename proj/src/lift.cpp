#include "canonlift/lift.hpp"

#include <set>

#include "canonlift/errors.hpp"

namespace canonlift {

std::int64_t TurningNumber::value() const {
  if (!integral())
    throw NonIntegralTurning("turning number " + std::to_string(as_double()) + " is not an integer");
  return quarters / 4;
}

std::int64_t TurningNumber::doubled() const {
  if (!half_integral()) throw NonIntegralTurning("turning number is not a half-integer");
  return quarters / 2;
}

EdgeOffsetTable EdgeOffsetTable::calibrated(const Surface& s) {
  EdgeOffsetTable t;
  t.quarters_.assign(static_cast<std::size_t>(s.generator_count()), 0);
  if (s.closed() && s.genus() >= 1) {
    const auto defect = cone_point_defect(s, t);
    if (defect != euler_char(s))
      throw Error("edge offset table fails the Poincare-Hopf check: defect " + std::to_string(defect) +
                  ", expected " + std::to_string(euler_char(s)));
  }
  return t;
}

std::int64_t EdgeOffsetTable::offset(Letter l) const {
  auto g = static_cast<std::size_t>(generator_of(l));
  if (g >= quarters_.size()) return 0;
  return is_inverse(l) ? -quarters_[g] : quarters_[g];
}

TurningNumber raw_turning(const Component& c, const EdgeOffsetTable& offsets) {
  TurningNumber t;
  for (const Event& e : c) {
    switch (e.kind) {
      case EventKind::QTurn: t.quarters += e.value; break;
      case EventKind::KinkL: t.quarters += 4; break;
      case EventKind::KinkR: t.quarters -= 4; break;
      case EventKind::CuspU: t.quarters += 2; break;
      case EventKind::CuspD: t.quarters -= 2; break;
      case EventKind::Edge: t.quarters += offsets.offset(e.value); break;
      case EventKind::Cross: break;
    }
  }
  return t;
}

namespace {

const Component& component_at(const Diagram& d, int component) {
  if (component < 0 || static_cast<std::size_t>(component) >= d.components.size())
    throw MissingReference("no component " + std::to_string(component));
  return d.components[static_cast<std::size_t>(component)];
}

}  // namespace

TurningNumber turning_number(const Diagram& d, int component) {
  TurningNumber t = raw_turning(component_at(d, component), EdgeOffsetTable::calibrated(d.surface));
  if (d.mode == Mode::Smooth && !t.integral())
    throw NonIntegralTurning("component " + std::to_string(component) + " has turning number " +
                             std::to_string(t.as_double()));
  return t;
}

Component vertex_link_curve(const Surface& s) {
  if (!s.closed() || s.genus() < 1) throw UnsupportedSurface("vertex link needs a closed surface of genus >= 1");
  const Word r = s.boundary_word();
  const std::size_t corners = r.size();          // 4g
  const std::size_t total_quarters = 2 * corners - 4;  // (4g-2)pi in quarter turns
  Component c;
  for (std::size_t i = 0; i < corners; ++i) {
    c.push_back(Event::edge(r[i]));
    // Spread the turning as evenly as quarter turns allow.
    std::size_t upto = (i + 1) * total_quarters / corners;
    std::size_t before = i * total_quarters / corners;
    for (std::size_t q = before; q < upto; ++q) c.push_back(Event::qturn(1));
  }
  return c;
}

std::int64_t cone_point_defect(const Surface& s, const EdgeOffsetTable& offsets) {
  const Component small_loop(4, Event::qturn(1));
  return raw_turning(small_loop, offsets).quarters / 4 - raw_turning(vertex_link_curve(s), offsets).quarters / 4;
}

std::int64_t reduce_mod(std::int64_t x, std::int64_t modulus) {
  if (modulus == 0) return x;
  std::int64_t r = x % modulus;
  return r < 0 ? r + modulus : r;
}

void require_compatible(const Diagram& d, const CircleBundle& bundle) {
  if (!(d.surface == bundle.base())) throw ModeMismatch("diagram surface differs from the bundle base");
  const Mode want = bundle.cusped() ? Mode::CuspSmooth : Mode::Smooth;
  if (d.mode != want)
    throw ModeMismatch(std::string("a ") + (d.mode == Mode::Smooth ? "smooth" : "cusp-smooth") +
                       " diagram does not live in a " + to_string(bundle.kind()) + " bundle");
}

std::int64_t fiber_degree(const Diagram& d, const CircleBundle& bundle, int component) {
  require_compatible(d, bundle);
  TurningNumber t = turning_number(d, component);
  return bundle.cusped() ? t.doubled() : t.value();
}

LiftClass lift_class(const Diagram& d, const CircleBundle& bundle, int component) {
  LiftClass lc;
  lc.modulus = bundle.euler_abs();
  lc.fiber = reduce_mod(fiber_degree(d, bundle, component), lc.modulus);
  Word edges;
  for (const Event& e : component_at(d, component))
    if (e.kind == EventKind::Edge) edges.push_back(e.value);
  lc.base = d.surface.homology_class(edges);
  return lc;
}

// ---------------------------------------------------------------------------

std::size_t segment_count(const Component& c) {
  std::size_t q = 0;
  for (const Event& e : c)
    if (e.kind == EventKind::QTurn) ++q;
  return q == 0 ? 1 : q;
}

void validate_shadow(const TwistedShadow& shadow, const CircleBundle& bundle) {
  const Diagram& d = shadow.diagram;
  require_compatible(d, bundle);
  for (const auto& comp : d.components)
    for (const Event& e : comp)
      if (e.is_loop_like()) throw Error("a twisted shadow may not contain kinks or cusps");
  if (auto v = validate(d); !v.empty()) throw Error("invalid shadow diagram: " + v.front().message);

  const auto n = static_cast<int>(d.components.size());
  for (const auto& [ref, m] : shadow.annotations.twist) {
    if (ref.first < 0 || ref.first >= n) throw MissingReference("twist references missing component " + std::to_string(ref.first));
    auto segs = segment_count(d.components[static_cast<std::size_t>(ref.first)]);
    if (ref.second < 0 || static_cast<std::size_t>(ref.second) >= segs)
      throw MissingReference("twist references missing segment " + std::to_string(ref.first) + "." + std::to_string(ref.second));
  }
  std::set<int> ids;
  for (const auto& comp : d.components)
    for (const Event& e : comp)
      if (e.kind == EventKind::Cross) ids.insert(e.value);
  for (const auto& [id, fix] : shadow.annotations.crossing_fix)
    if (!ids.count(id)) throw MissingReference("fix references missing crossing X" + std::to_string(id));
  for (const auto& [ref, mode] : shadow.annotations.corner_mode) {
    if (ref.first < 0 || ref.first >= n) throw MissingReference("corner references missing component " + std::to_string(ref.first));
    std::size_t q = 0;
    for (const Event& e : d.components[static_cast<std::size_t>(ref.first)])
      if (e.kind == EventKind::QTurn) ++q;
    if (ref.second < 0 || static_cast<std::size_t>(ref.second) >= q)
      throw MissingReference("corner references missing turn " + std::to_string(ref.first) + "." + std::to_string(ref.second));
  }
}

CanonicalizeResult canonicalize(const TwistedShadow& shadow, const CircleBundle& bundle) {
  validate_shadow(shadow, bundle);
  const Diagram& d = shadow.diagram;
  const bool cusped = bundle.cusped();
  const auto& ann = shadow.annotations;

  auto emit_twist = [&](Component& out, std::int64_t m) {
    for (std::int64_t i = 0; i < (m < 0 ? -m : m); ++i) {
      if (cusped) {
        Event c = m > 0 ? Event::cusp_up() : Event::cusp_down();
        out.push_back(c);
        out.push_back(c);
      } else {
        out.push_back(m > 0 ? Event::kink_left() : Event::kink_right());
      }
    }
  };
  auto raise = [&] { return cusped ? Event::cusp_up() : Event::kink_left(); };
  auto lower = [&] { return cusped ? Event::cusp_down() : Event::kink_right(); };

  CanonicalizeResult res;
  res.diagram = Diagram{d.surface, d.mode, {}};
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const int c = static_cast<int>(ci);
    const Component& in = d.components[ci];
    Component out;
    std::int64_t delta = 0;
    auto twist_of = [&](int seg) -> std::int64_t {
      auto it = ann.twist.find({c, seg});
      return it == ann.twist.end() ? 0 : it->second;
    };

    const bool no_turns = segment_count(in) == 1 &&
                          std::none_of(in.begin(), in.end(), [](const Event& e) { return e.kind == EventKind::QTurn; });
    if (no_turns) {
      emit_twist(out, twist_of(0));
      delta += twist_of(0);
    }
    int turn = 0;
    for (const Event& e : in) {
      if (e.kind == EventKind::QTurn) {
        auto cm = ann.corner_mode.find({c, turn});
        if (cm != ann.corner_mode.end() && cm->second == CornerMode::ThroughLoop) {
          for (int k = 0; k < 3; ++k) out.push_back(Event::qturn(-e.value));
          delta += e.value < 0 ? 1 : -1;
        } else {
          out.push_back(e);
        }
        emit_twist(out, twist_of(turn));
        delta += twist_of(turn);
        ++turn;
        continue;
      }
      if (e.kind == EventKind::Cross && e.slot == 1) {
        auto fx = ann.crossing_fix.find(e.value);
        if (fx != ann.crossing_fix.end() && fx->second != CrossingFix::None) {
          const bool left = fx->second == CrossingFix::Left;
          out.push_back(left ? raise() : lower());
          out.push_back(e);
          out.push_back(left ? lower() : raise());
          continue;
        }
      }
      out.push_back(e);
    }
    res.diagram.components.push_back(std::move(out));
    res.turning_delta.push_back(delta);
  }
  return res;
}

}  // namespace canonlift
