#pragma once

#include <cstdint>
#include <vector>

#include "canonlift/surface.hpp"
#include "canonlift/word.hpp"

namespace canonlift {

// Word problem in pi1 of a surface. Words are over the surface alphabet (all 2g + k letters).
//
// Closed surfaces of genus >= 2 use Dehn's algorithm on the symmetrized relator
// [a1,b1]...[ag,bg]: any subword longer than half a cyclic rotation of the relator (or its
// inverse) is replaced by the inverse of the shorter complement. The relator satisfies C'(1/6),
// so a word is trivial exactly when this reaches the empty word. Bounded surfaces have free
// fundamental group and reduce freely after rewriting the last boundary letter.
//
// Throws UnsupportedSurface for closed surfaces of genus <= 1.
Word dehn_reduce(std::span<const Letter> w, const Surface& s);
bool is_trivial(std::span<const Letter> w, const Surface& s);

// Dehn reduction applied to the cyclic word (subwords may wrap), then cyclically reduced.
Word cyclic_dehn_reduce(std::span<const Letter> w, const Surface& s);

// Free homotopy classes of unoriented loops: w1 ~ w2 or w1 ~ w2^{-1}.
//
// Both words are cyclically Dehn-reduced; each is then closed under length-preserving swaps of
// an exact half relator for the other half, and the closures are compared up to rotation.
// Returns false without the closure search when the homology classes differ up to sign.
bool conjugate_classes_equal(std::span<const Letter> w1, std::span<const Letter> w2, const Surface& s);

// beta = prod_j g_j^{-1} w^{eps_j} g_j.
struct GroupElementExpr {
  Word w;
  struct Factor {
    Word g;
    int epsilon = 1;  // +1 or -1
  };
  std::vector<Factor> factors;
};

Word evaluate(const GroupElementExpr& expr);
std::int64_t exponent_sum(const GroupElementExpr& expr);

enum class PowersumVerdict { ConsistentWithLemma, ViolatesLemma };

// ViolatesLemma only if the product is trivial, w is nontrivial and the exponent sum is nonzero.
PowersumVerdict powersum_check(const GroupElementExpr& expr, const Surface& s);

}  // namespace canonlift
