#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support.hpp"
#include "canonlift/errors.hpp"

using namespace canonlift;

namespace {

Diagram ut(const std::string& body) { return parse("surface genus=2 boundary=0\nbundle UT\n" + body); }
Diagram pt(const std::string& body) { return parse("surface genus=2 boundary=0\nbundle PT\n" + body); }
const CircleBundle kUT(Surface(2, 0), BundleKind::UnitTangent);
const CircleBundle kPT(Surface(2, 0), BundleKind::ProjectiveTangent);

}  // namespace

TEST_SUITE("lift") {
  TEST_CASE("turning numbers") {
    CHECK(turning_number(ut("comp: Q+ Q+ Q+ Q+\n"), 0).value() == 1);
    CHECK(turning_number(ut("comp: Q+ Q+ L+ Q+ Q+\n"), 0).value() == 2);
    CHECK(turning_number(ut("comp: Q- Q- Q- Q-\n"), 0).value() == -1);
    CHECK(turning_number(pt("comp: Q+ C^ Q+ C^\n"), 0).doubled() == 3);
    Diagram bad = ut("comp: Q+ Q+ Q+ Q+\n");
    bad.components[0].pop_back();
    CHECK_THROWS_AS(turning_number(bad, 0), NonIntegralTurning);
  }

  TEST_CASE("turning is invariant under rotation") {
    testsupport::Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      Diagram d = testsupport::random_diagram(rng, Mode::Smooth);
      for (std::size_t c = 0; c < d.components.size(); ++c) {
        auto before = turning_number(d, static_cast<int>(c));
        auto& comp = d.components[c];
        std::rotate(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(rng() % comp.size()), comp.end());
        CHECK(turning_number(d, static_cast<int>(c)) == before);
      }
    }
  }

  TEST_CASE("lift classes") {
    auto lc = lift_class(ut("comp: Q+ Q+ Q+ Q+\n"), kUT, 0);
    CHECK(lc.base == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(lc.fiber == 1);
    CHECK(lc.modulus == 2);
    CHECK(lift_class(ut("comp: Q+ L+ Q+ L- Q+ Q+\n"), kUT, 0) == lc);
    auto a1 = lift_class(ut("comp: a1 Q+ Q+ Q- Q-\n"), kUT, 0);
    CHECK(a1.base == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(a1.fiber == 0);
    CHECK(lift_class(pt("comp: Q+ C^ Q+ Q+ Cv Q+\n"), kPT, 0).fiber == 2);
    CHECK_THROWS_AS(lift_class(ut("comp: Q+ Q+ Q+ Q+\n"), kPT, 0), ModeMismatch);
    CircleBundle triv(Surface(2, 0), BundleKind::Trivial);
    CHECK(lift_class(ut("comp: Q+ Q+ Q+ Q+ L+ L+ L+\n"), triv, 0).fiber == 4);
  }

  TEST_CASE("vertex link and the Poincare-Hopf defect") {
    for (int g = 2; g <= 5; ++g) {
      Surface s(g, 0);
      Component link = vertex_link_curve(s);
      std::int64_t quarters = 0;
      for (const auto& e : link)
        if (e.kind == EventKind::QTurn) quarters += e.value;
      CHECK(quarters == 8 * g - 4);
      auto table = EdgeOffsetTable::calibrated(s);
      CHECK(raw_turning(link, table).value() == 2 * g - 1);
      CHECK(cone_point_defect(s, table) == euler_char(s));
      Word letters;
      for (const auto& e : link)
        if (e.kind == EventKind::Edge) letters.push_back(e.value);
      CHECK(letters == s.boundary_word());
    }
    CHECK_THROWS_AS(vertex_link_curve(Surface(2, 1)), UnsupportedSurface);
  }

  TEST_CASE("canonicalize examples") {
    auto doc = parse_document("surface genus=2 boundary=0\nbundle UT\ncomp: Q+ Q+ Q+ Q+\n");
    auto same = canonicalize({doc.diagram, {}}, kUT);
    CHECK(same.diagram == doc.diagram);
    CHECK(same.turning_delta == std::vector<std::int64_t>{0});

    ShadowAnnotations three;
    three.twist[{0, 1}] = 3;
    auto r = canonicalize({doc.diagram, three}, kUT);
    CHECK(std::count(r.diagram.components[0].begin(), r.diagram.components[0].end(), Event::kink_left()) == 3);
    CHECK(turning_number(r.diagram, 0).value() == 4);
    CHECK(r.turning_delta[0] == 3);

    auto cross = parse_document("surface genus=2 boundary=0\nbundle UT\ncomp: Q+ X1.1 Q+ X1.2 Q+ Q+\nfix: X1 left\n");
    auto f = canonicalize({cross.diagram, cross.annotations}, kUT);
    const Component expect{Event::qturn(1), Event::kink_left(), Event::cross(1, 1), Event::kink_right(),
                           Event::qturn(1), Event::cross(1, 2), Event::qturn(1), Event::qturn(1)};
    CHECK(f.diagram.components[0] == expect);
    CHECK(validate(f.diagram).empty());
    CHECK(turning_number(f.diagram, 0).value() == 1);

    ShadowAnnotations corner;
    corner.corner_mode[{0, 2}] = CornerMode::ThroughLoop;
    auto c = canonicalize({doc.diagram, corner}, kUT);
    CHECK(turning_number(c.diagram, 0).value() == 0);
    CHECK(c.turning_delta[0] == -1);
  }

  TEST_CASE("canonicalize in PT uses cusp pairs") {
    auto doc = parse_document("surface genus=2 boundary=0\nbundle PT\ncomp: Q+ Q+ Q+ Q+\ntwist: 0.0 -2\n");
    auto r = canonicalize({doc.diagram, doc.annotations}, kPT);
    CHECK(std::count(r.diagram.components[0].begin(), r.diagram.components[0].end(), Event::cusp_down()) == 4);
    CHECK(turning_number(r.diagram, 0).value() == -1);
    CHECK(validate(r.diagram).empty());
  }

  TEST_CASE("canonicalize errors") {
    auto doc = parse_document("surface genus=2 boundary=0\nbundle UT\ncomp: Q+ Q+ Q+ Q+\n");
    ShadowAnnotations bad;
    bad.twist[{0, 7}] = 1;
    CHECK_THROWS_AS(canonicalize({doc.diagram, bad}, kUT), MissingReference);
    ShadowAnnotations fix;
    fix.crossing_fix[4] = CrossingFix::Left;
    CHECK_THROWS_AS(canonicalize({doc.diagram, fix}, kUT), MissingReference);
    CHECK_THROWS_AS(canonicalize({doc.diagram, {}}, kPT), ModeMismatch);
  }
}
