#include <doctest.h>

#include "../support.hpp"
#include "canonlift/errors.hpp"
#include "canonlift/surface_group.hpp"

using namespace canonlift;
using testsupport::Rng;

namespace {

Word conj(const Word& c, const Word& r) { return concat(concat(c, r), inverse(c)); }

bool homologically_nonzero(const Word& w, const Surface& s) {
  for (auto x : s.homology_class(w))
    if (x != 0) return true;
  return false;
}

}  // namespace

TEST_SUITE("surface_group") {
  TEST_CASE("dehn examples") {
    Surface s(2, 0);
    CHECK(dehn_reduce(s.boundary_word(), s).empty());
    CHECK(dehn_reduce(s.alphabet().parse("a1"), s) == s.alphabet().parse("a1"));
    CHECK_THROWS_AS(dehn_reduce(Word{1}, Surface(1, 0)), UnsupportedSurface);
    // More than half of the relator becomes the inverse of the rest.
    CHECK(dehn_reduce(s.alphabet().parse("a1 b1 a1' b1' a2"), s) == s.alphabet().parse("b2 a2 b2'"));
  }

  TEST_CASE("inserting a conjugated relator keeps the group element") {
    Rng rng(5);
    for (int g : {2, 3}) {
      Surface s(g, 0);
      for (int t = 0; t < 300; ++t) {
        Word w = testsupport::random_word(rng, s.generator_count(), rng() % 8);
        Word w2 = testsupport::random_word(rng, s.generator_count(), rng() % 8);
        Word c = testsupport::random_word(rng, s.generator_count(), rng() % 6);
        Word r = testsupport::coin(rng) ? s.boundary_word() : inverse(s.boundary_word());
        Word lhs = concat(concat(w, conj(c, r)), w2);
        Word rhs = concat(w, w2);
        CHECK(is_trivial(concat(lhs, inverse(rhs)), s));
        CHECK(dehn_reduce(dehn_reduce(lhs, s), s) == dehn_reduce(lhs, s));
      }
    }
  }

  TEST_CASE("nonzero homology means nontrivial") {
    Rng rng(9);
    Surface s(2, 0);
    for (int t = 0; t < 300; ++t) {
      Word w = testsupport::random_word(rng, 4, 1 + rng() % 20);
      if (homologically_nonzero(w, s)) CHECK_FALSE(is_trivial(w, s));
    }
  }

  TEST_CASE("free case") {
    Surface s(1, 2);
    CHECK(is_trivial(s.alphabet().parse("a1 b1 b1' a1'"), s));
    CHECK_FALSE(is_trivial(s.alphabet().parse("a1 b1 a1' b1'"), s));
    // The boundary relation holds in the bounded surface too.
    CHECK(is_trivial(s.boundary_word(), s));
  }

  TEST_CASE("conjugacy") {
    Surface s(2, 0);
    auto p = [&](const char* t) { return s.alphabet().parse(t); };
    CHECK(conjugate_classes_equal(p("a1"), p("b1' a1 b1"), s));
    CHECK(conjugate_classes_equal(p("a1"), p("a1'"), s));
    CHECK_FALSE(conjugate_classes_equal(p("a1"), p("b1"), s));
    CHECK(conjugate_classes_equal(p("a1 b1 a1' b1'"), p("b1' a1 b1 a1'"), s));
    // Conjugating by a long word and inserting a relator.
    Word w = p("a1 b2 a2");
    Word c = p("b1 a2' b1");
    Word cw = concat(concat(c, w), inverse(c));
    cw = concat(cw, s.boundary_word());
    CHECK(conjugate_classes_equal(w, cw, s));
  }

  TEST_CASE("powersum") {
    Surface s(2, 0);
    GroupElementExpr e1{s.alphabet().parse("a1"), {{{}, 1}, {s.alphabet().parse("b1"), -1}}};
    CHECK(exponent_sum(e1) == 0);
    CHECK(powersum_check(e1, s) == PowersumVerdict::ConsistentWithLemma);
    GroupElementExpr e2{s.alphabet().parse("a1"), {{{}, 1}}};
    CHECK(exponent_sum(e2) == 1);
    CHECK(evaluate(e2) == s.alphabet().parse("a1"));
    CHECK(powersum_check(e2, s) == PowersumVerdict::ConsistentWithLemma);
    // A relator as w: trivial product, but w is trivial too.
    GroupElementExpr e3{s.boundary_word(), {{{}, 1}, {{}, 1}}};
    CHECK(powersum_check(e3, s) == PowersumVerdict::ConsistentWithLemma);
  }
}
