#pragma once

#include <cstdint>
#include <vector>

#include "canonlift/diagram.hpp"
#include "canonlift/surface.hpp"

namespace canonlift {

// Turning number in quarter turns. Kinks count one full turn, cusps half a turn
// (up +1/2, down -1/2), quarter-turn events +-1/4.
struct TurningNumber {
  std::int64_t quarters = 0;

  bool integral() const { return quarters % 4 == 0; }
  bool half_integral() const { return quarters % 2 == 0; }
  // Throws NonIntegralTurning unless integral().
  std::int64_t value() const;
  // Twice the turning number; the projective fibre degree. Throws unless half_integral().
  std::int64_t doubled() const;
  double as_double() const { return static_cast<double>(quarters) / 4.0; }

  friend auto operator<=>(const TurningNumber&, const TurningNumber&) = default;
};

// Per-letter offsets (in quarter turns) applied when a component crosses a polygon side.
//
// Turning is measured against the horizontal/vertical frame of a flat structure on the surface
// with a single cone point at the polygon vertex (cone angle (4g-2)pi). The frame is parallel
// across every side, so all offsets are zero; the cone-point defect shows up only for curves
// that encircle the vertex, e.g. vertex_link_curve() turns 2g-1 times instead of once.
class EdgeOffsetTable {
 public:
  // The frozen table after checking it against the Poincare-Hopf defect (throws Error if not).
  static EdgeOffsetTable calibrated(const Surface& s);

  std::int64_t offset(Letter l) const;
  const std::vector<std::int64_t>& quarters() const { return quarters_; }

 private:
  std::vector<std::int64_t> quarters_;
};

// Raw turning with an explicit table; never throws.
TurningNumber raw_turning(const Component& c, const EdgeOffsetTable& offsets);

// Smooth diagrams throw NonIntegralTurning when the result is fractional.
TurningNumber turning_number(const Diagram& d, int component);

// Small loop around the single polygon vertex: crosses the relator letters in order, turning
// left through a total of (4g-2)pi spread over the 4g corners.
Component vertex_link_curve(const Surface& s);

// Turning of a small counterclockwise loop around an ordinary point minus that of the vertex
// link. Equals euler_char(s) when the offsets are consistent with Poincare-Hopf.
std::int64_t cone_point_defect(const Surface& s, const EdgeOffsetTable& offsets);

struct LiftClass {
  std::vector<std::int64_t> base;  // H1(S) coordinates of the shadow
  std::int64_t fiber = 0;          // reduced to [0, modulus) when modulus != 0
  std::int64_t modulus = 0;        // |e|

  friend auto operator<=>(const LiftClass&, const LiftClass&) = default;
};

std::int64_t reduce_mod(std::int64_t x, std::int64_t modulus);

// Fibre degree of a component in the given bundle before reduction: the turning number for
// UT and trivial bundles, twice the turning number for PT.
std::int64_t fiber_degree(const Diagram& d, const CircleBundle& bundle, int component);

// Throws ModeMismatch when the surface differs or mode does not match the bundle kind.
LiftClass lift_class(const Diagram& d, const CircleBundle& bundle, int component);

void require_compatible(const Diagram& d, const CircleBundle& bundle);

// ---------------------------------------------------------------------------
// Twisted shadows
//
// Segments of a component are the stretches between consecutive quarter turns; segment j starts
// right after the j-th quarter turn (a component without quarter turns is one segment, 0).
struct TwistedShadow {
  Diagram diagram;
  ShadowAnnotations annotations;
};

std::size_t segment_count(const Component& c);

// Throws MissingReference / ModeMismatch / Error on a bad shadow.
void validate_shadow(const TwistedShadow& shadow, const CircleBundle& bundle);

struct CanonicalizeResult {
  Diagram diagram;
  // Expected change of each component's turning number, from the bookkeeping alone:
  // sum of twists, +1 per looped right corner, -1 per looped left corner, 0 per crossing fix.
  std::vector<std::int64_t> turning_delta;
};

// Builds the diagram whose canonical lift realizes the twisted shadow.
//   twist m on a segment: |m| kinks (L+ for m > 0, L- for m < 0) right after the segment's
//     opening turn; in PT, |m| same-sign cusp pairs instead.
//   fix left on crossing X: L+ just before and L- just after the slot-1 visit (right: L-, L+);
//     cusps C^/Cv in PT.
//   looped corner: Q- becomes Q+ Q+ Q+, Q+ becomes Q- Q- Q-.
CanonicalizeResult canonicalize(const TwistedShadow& shadow, const CircleBundle& bundle);

}  // namespace canonlift
