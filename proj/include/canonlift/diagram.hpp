#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "canonlift/surface.hpp"

namespace canonlift {

enum class EventKind : std::uint8_t { Edge, Cross, KinkL, KinkR, CuspU, CuspD, QTurn };

// One step along a component in rectilinear normal form.
struct Event {
  EventKind kind = EventKind::QTurn;
  std::int32_t value = 0;  // Edge: letter; Cross: crossing id; QTurn: +1 / -1
  std::int32_t slot = 0;   // Cross: 1 or 2

  static Event edge(Letter l) { return {EventKind::Edge, l, 0}; }
  static Event cross(int id, int slot) { return {EventKind::Cross, id, slot}; }
  static Event kink_left() { return {EventKind::KinkL, 0, 0}; }
  static Event kink_right() { return {EventKind::KinkR, 0, 0}; }
  static Event cusp_up() { return {EventKind::CuspU, 0, 0}; }
  static Event cusp_down() { return {EventKind::CuspD, 0, 0}; }
  static Event qturn(int sign) { return {EventKind::QTurn, sign > 0 ? 1 : -1, 0}; }

  bool is_kink() const { return kind == EventKind::KinkL || kind == EventKind::KinkR; }
  bool is_cusp() const { return kind == EventKind::CuspU || kind == EventKind::CuspD; }
  // Kinks and cusps: the atomic loop/cusp events that moves slide and (de)stabilize.
  bool is_loop_like() const { return is_kink() || is_cusp(); }

  friend auto operator<=>(const Event&, const Event&) = default;
};

using Component = std::vector<Event>;

enum class Mode { Smooth, CuspSmooth };

struct Diagram {
  Surface surface;
  Mode mode = Mode::Smooth;
  std::vector<Component> components;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.surface == b.surface && a.mode == b.mode && a.components == b.components;
  }
};

Mode mode_for(BundleKind kind);

struct Violation {
  enum class Rule {
    UnpairedCrossing,
    DuplicateCrossingSlot,
    InvalidCrossingSlot,
    CuspInSmoothMode,
    OddCuspCount,
    NonIntegralTurning,
    UnknownGenerator,
    InvalidQuarterTurn,
  };
  Rule rule;
  int component = -1;
  int index = -1;
  int crossing = -1;
  std::string message;
};

std::string to_string(Violation::Rule r);

// Empty iff the pairing, mode, cusp-parity and closure rules all hold.
// Closure: the tangent direction returns to itself, i.e. the quarter turns sum to 0 mod 4 once
// kinks (full turns) and cusp pairs are accounted for.
std::vector<Violation> validate(const Diagram& d);

// Cyclic sequence of Edge letters of one component, freely and cyclically reduced.
Word shadow_word(const Diagram& d, int component);

// Number of crossing ids plus number of kinks.
std::size_t self_intersection_count(const Diagram& d);

// ---------------------------------------------------------------------------
// Text format
//
//   surface genus=<g> boundary=<k>
//   bundle <UT|PT|TRIVIAL>
//   comp: <event> <event> ...
//
// Events: a<i>, b<i>, d<j> with optional ' for the inverse; X<id>.<slot>; L+ / L-; C^ / Cv; Q+ / Q-.
// Twisted shadows add annotation lines:
//   twist: <comp>.<segment> <m>
//   fix: X<id> left|right
//   corner: <comp>.<turn> loop|smooth
// '#' starts a comment.

enum class CrossingFix { None, Left, Right };
enum class CornerMode { Smooth, ThroughLoop };

struct ShadowAnnotations {
  std::map<std::pair<int, int>, std::int64_t> twist;          // (component, segment) -> m
  std::map<int, CrossingFix> crossing_fix;                     // crossing id -> side
  std::map<std::pair<int, int>, CornerMode> corner_mode;       // (component, quarter-turn index)

  bool empty() const { return twist.empty() && crossing_fix.empty() && corner_mode.empty(); }
  friend bool operator==(const ShadowAnnotations&, const ShadowAnnotations&) = default;
};

struct DiagramDocument {
  Diagram diagram;
  BundleKind bundle = BundleKind::UnitTangent;
  ShadowAnnotations annotations;
};

DiagramDocument parse_document(std::string_view text);
std::string serialize_document(const DiagramDocument& doc);

// Plain diagrams: annotation lines are rejected.
Diagram parse(std::string_view text);
std::string serialize(const Diagram& d, BundleKind bundle);
std::string serialize(const Diagram& d);  // UT for smooth, PT for cusp-smooth

std::string format_event(const Event& e, const Surface& s);
std::string format_component(const Component& c, const Surface& s);

// ---------------------------------------------------------------------------
// Canonical form up to cyclic rotation of components, permutation of components and
// relabelling of crossings (ids renumbered from 1 in order of first visit, first visit gets slot 1).
Diagram canonical_form(const Diagram& d);
// Compact string of the canonical form; equal keys mean isomorphic diagrams.
std::string canonical_key(const Diagram& d);
// Compact string of the diagram exactly as given (no canonicalization).
std::string encode(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

int next_crossing_id(const Diagram& d);

}  // namespace canonlift
