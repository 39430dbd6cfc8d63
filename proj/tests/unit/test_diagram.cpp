#include <doctest.h>

#include "../support.hpp"
#include "canonlift/errors.hpp"

using namespace canonlift;

namespace {

const char* kHeader = "surface genus=2 boundary=0\nbundle UT\n";

Diagram diagram(const std::string& body) { return parse(std::string(kHeader) + body); }

std::vector<Violation::Rule> rules(const Diagram& d) {
  std::vector<Violation::Rule> out;
  for (const auto& v : validate(d)) out.push_back(v.rule);
  return out;
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("parse and serialize round trip") {
    Diagram d = diagram("comp: a1 Q+ X1.1 L+ Q+ b2' Q+ X1.2 L- Q+\ncomp:\n");
    CHECK(d.components.size() == 2);
    CHECK(d.components[1].empty());
    CHECK(parse(serialize(d)) == d);
    auto doc = parse_document(std::string(kHeader) + "comp: Q+ Q+ Q+ Q+\ntwist: 0.1 3\n");
    CHECK(doc.annotations.twist.at({0, 1}) == 3);
    CHECK(parse_document(serialize_document(doc)).annotations == doc.annotations);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse(std::string(kHeader) + "comp: Q+ Z9\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 10);
    }
    CHECK_THROWS_AS(parse("bundle UT\n"), ParseError);
    CHECK_THROWS_AS(parse(std::string(kHeader) + "twist: 0.0 1\ncomp: Q+\n"), ParseError);
  }

  TEST_CASE("validation rules") {
    CHECK(validate(diagram("comp: Q+ Q+ Q+ Q+\n")).empty());
    CHECK(rules(diagram("comp: Q+ X1.1 Q+ Q+ Q+\n")) == std::vector{Violation::Rule::UnpairedCrossing});
    CHECK(validate(diagram("comp: Q+ X1.1 Q+ Q+ Q+\n")).front().crossing == 1);
    CHECK(rules(diagram("comp: Q+ Q+ Q+\n")) == std::vector{Violation::Rule::NonIntegralTurning});
    Diagram cusp = diagram("comp: Q+ Q+ Q+ Q+\n");
    cusp.components[0].push_back(Event::cusp_up());
    cusp.components[0].push_back(Event::cusp_down());
    CHECK(rules(cusp) == std::vector{Violation::Rule::CuspInSmoothMode, Violation::Rule::CuspInSmoothMode});
    Diagram pt = parse("surface genus=2 boundary=0\nbundle PT\ncomp: C^ Q+ Q+\n");
    CHECK(rules(pt) == std::vector{Violation::Rule::OddCuspCount});
  }

  TEST_CASE("shadow words and counts") {
    Diagram d = diagram("comp: a1 Q+ b1 b1' Q+ a2 Q+ a1' Q+ X1.1 X1.2 L+ L-\n");
    CHECK(d.surface.alphabet().format(shadow_word(d, 0)) == "a2");
    CHECK(self_intersection_count(d) == 3);
  }

  TEST_CASE("canonical form is invariant under rotation, permutation and relabelling") {
    testsupport::Rng rng(21);
    for (int t = 0; t < 200; ++t) {
      Diagram d = testsupport::random_diagram(rng, t % 2 ? Mode::Smooth : Mode::CuspSmooth);
      Diagram e = d;
      for (auto& c : e.components)
        if (!c.empty()) std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rng() % c.size()), c.end());
      std::shuffle(e.components.begin(), e.components.end(), rng);
      for (auto& c : e.components)
        for (auto& ev : c)
          if (ev.kind == EventKind::Cross) ev.value += 100;
      CHECK(canonical_form(d) == canonical_form(e));
      CHECK(canonical_key(d) == canonical_key(e));
      CHECK(canonical_form(canonical_form(d)) == canonical_form(d));
      CHECK(validate(canonical_form(d)).empty());
    }
  }

  TEST_CASE("canonical form separates different diagrams") {
    CHECK_FALSE(isomorphic(diagram("comp: Q+ Q+ Q+ Q+\n"), diagram("comp: Q+ Q+ Q+ Q+ L+ L-\n")));
    CHECK_FALSE(isomorphic(diagram("comp: a1 Q+ Q+ Q+ Q+\n"), diagram("comp: a1' Q+ Q+ Q+ Q+\n")));
    // Same events, different crossing pattern.
    CHECK_FALSE(isomorphic(diagram("comp: X1.1 X2.1 X1.2 X2.2 Q+ Q+ Q+ Q+\n"),
                           diagram("comp: X1.1 X2.1 X2.2 X1.2 Q+ Q+ Q+ Q+\n")));
  }
}
