#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "canonlift/diagram.hpp"

namespace canonlift {

enum class MoveKind { R2_insert, R2_remove, R3, KinkSlide, Stab, Destab, Transvection };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);  // throws Error

// Intersection of a transvection curve with the diagram: the loops/cusps go into `gap` of
// `component` (gap i = just before event i, gap len = at the end), counted with `sign`.
struct IntersectionSite {
  int component = 0;
  int gap = 0;
  int sign = 1;
  friend bool operator==(const IntersectionSite&, const IntersectionSite&) = default;
};

struct TwistCurve {
  Word word;  // reduced cyclic word in the surface generators
  std::int64_t weight = 1;
  std::vector<IntersectionSite> sites;
  friend bool operator==(const TwistCurve&, const TwistCurve&) = default;
};

using WeightedMulticurve = std::vector<TwistCurve>;

// Sites by kind (indices refer to the diagram the move is applied to):
//   R2_insert   [c1, gap1, c2, gap2]        parallel: new crossings a,b go in as a.1 b.1 at the
//                                            first gap and b.2 a.2 (antiparallel) or a.2 b.2 (parallel)
//   R2_remove   [c1, i1, c2, i2]            crossing pairs at i1,i1+1 and i2,i2+1 forming a bigon
//   R3          [c1, i1, c2, i2, c3, i3]    three adjacent crossing pairs forming a triangle
//   KinkSlide   [c, i]                      swaps events i and i+1 (cyclically)
//   Stab        [c, gap]                    sign +1 inserts L+ L- (C^ Cv), -1 the reverse
//   Destab      [c, i]                      removes the opposite pair at i, i+1
//   Transvection                            uses `curve`
struct MoveInstance {
  MoveKind kind = MoveKind::Stab;
  std::vector<int> site;
  bool parallel = false;
  int sign = 1;
  WeightedMulticurve curve;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

std::string describe(const MoveInstance& m);

// True for moves that never make the diagram longer.
bool is_non_growing(MoveKind k);

// Every catalogue site of the diagram; Transvection is never listed.
std::vector<MoveInstance> applicable_moves(const Diagram& d);
// Only the kinds in `kinds`.
std::vector<MoveInstance> applicable_moves(const Diagram& d, const std::vector<MoveKind>& kinds);

// Throws InapplicableMove when the site does not match the kind's pattern.
Diagram apply_move(const Diagram& d, const MoveInstance& m);

// L+ at [c, i] becomes X.1 Q+ Q+ Q+ Q+ X.2 with a fresh crossing id (L-: four Q-).
Diagram expand_kink(const Diagram& d, int component, int index);
// Inverse of expand_kink: X Q Q Q Q X starting at [c, i], same crossing id, same turn signs.
Diagram contract_kink(const Diagram& d, int component, int index);

// Per-component change of the fibre degree produced by a transvection: sum of weight * sign.
std::vector<std::int64_t> transvection_shift(const WeightedMulticurve& curve, std::size_t component_count);

}  // namespace canonlift
