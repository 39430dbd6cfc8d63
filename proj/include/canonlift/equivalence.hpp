#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonlift/lift.hpp"
#include "canonlift/moves.hpp"

namespace canonlift {

struct Budget {
  std::size_t max_moves = 6;        // longest certificate
  std::size_t max_states = 100000;  // distinct diagrams visited over the whole search
  // Transvections whose sites refer to d1 as given; they may be applied (with integer
  // multiplicities) once, before any other move.
  std::vector<WeightedMulticurve> transvections;
  unsigned threads = 1;
  std::uint64_t seed = 0;  // the search itself is deterministic; kept for reporting
};

struct EquivalenceVerdict {
  enum class Kind { Equivalent, Distinguished, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<MoveInstance> certificate;  // Equivalent
  std::string invariant;                  // Distinguished: component_count, shadow_homology, lift_class
  std::string values1, values2;
  std::size_t states = 0;
};

std::string to_string(EquivalenceVerdict::Kind k);

std::vector<LiftClass> lift_classes(const Diagram& d, const CircleBundle& bundle);

// Non-transvection moves address the canonical form of the current diagram; a transvection
// addresses the current diagram as it is.
Diagram replay(const Diagram& d1, const std::vector<MoveInstance>& certificate);

bool certificate_valid(const Diagram& d1, const Diagram& d2, const std::vector<MoveInstance>& certificate);

// Certificate leading from replay(d1, certificate) back to d1. Transvection entries are not
// reversible this way (nullopt).
std::optional<std::vector<MoveInstance>> reverse_certificate(const Diagram& d1,
                                                             const std::vector<MoveInstance>& certificate);

// Whether delta lies in the subgroup spanned by the shift vectors, modulo `modulus` in every
// coordinate (modulus 0: over the integers).
bool shift_reachable(const std::vector<std::vector<std::int64_t>>& shifts, const std::vector<std::int64_t>& delta,
                     std::int64_t modulus);

// Fibre shift vectors (one per generator) of the allowed transvections.
std::vector<std::vector<std::int64_t>> transvection_shifts(const Diagram& d, const Budget& budget);

// Throws ModeMismatch when the diagrams live on different surfaces or in different modes and
// UnsupportedSurface when euler_char >= 0.
EquivalenceVerdict equivalent_bounded(const Diagram& d1, const Diagram& d2, const CircleBundle& bundle,
                                      const Budget& budget);

// Generator substitution x -> image[x]; missing generators map to themselves. On closed surfaces
// the relator has to map to the identity (Error otherwise).
using Relabeling = std::map<int, Word>;
Diagram relabel_generators(const Diagram& d, const Relabeling& image);

}  // namespace canonlift
