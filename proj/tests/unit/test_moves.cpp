#include <doctest.h>

#include "../support.hpp"
#include "canonlift/errors.hpp"

using namespace canonlift;
using namespace testsupport;

namespace {

Diagram ut(const std::string& body) { return parse("surface genus=2 boundary=0\nbundle UT\n" + body); }
Diagram pt(const std::string& body) { return parse("surface genus=2 boundary=0\nbundle PT\n" + body); }

std::size_t count_kind(const std::vector<MoveInstance>& ms, MoveKind k) {
  return static_cast<std::size_t>(std::count_if(ms.begin(), ms.end(), [&](const auto& m) { return m.kind == k; }));
}

MoveInstance make(MoveKind k, std::vector<int> site) {
  MoveInstance m;
  m.kind = k;
  m.site = std::move(site);
  return m;
}

}  // namespace

TEST_SUITE("moves") {
  TEST_CASE("embedded circle only has insertion sites") {
    Diagram d = ut("comp: Q+ Q+ Q+ Q+\n");
    for (const auto& m : applicable_moves(d))
      CHECK((m.kind == MoveKind::R2_insert || m.kind == MoveKind::Stab));
    CHECK(count_kind(applicable_moves(d), MoveKind::Stab) == 8);
  }

  TEST_CASE("destabilization site") {
    Diagram d = ut("comp: Q+ L+ L- Q+ Q+ Q+\n");
    auto ms = applicable_moves(d);
    REQUIRE(count_kind(ms, MoveKind::Destab) == 1);
    auto it = std::find_if(ms.begin(), ms.end(), [](const auto& m) { return m.kind == MoveKind::Destab; });
    CHECK(it->site == std::vector<int>{0, 1});
    Diagram r = apply_move(d, *it);
    CHECK(r == ut("comp: Q+ Q+ Q+ Q+\n"));
    CHECK(lift_class(r, bundle_for(r), 0) == lift_class(d, bundle_for(d), 0));
    // Cusps do not destabilize smooth diagrams and kinks do not destabilize PT ones.
    CHECK(count_kind(applicable_moves(pt("comp: Q+ L+ L- Q+ Q+ Q+\n")), MoveKind::Destab) == 0);
    CHECK(count_kind(applicable_moves(pt("comp: Q+ C^ Cv Q+ Q+ Q+\n")), MoveKind::Destab) == 1);
  }

  TEST_CASE("bigon fixture") {
    // Two strands crossing twice: X1 X2 on the first, X2 X1 on the second.
    Diagram d = ut("comp: a1 X1.1 X2.1 Q+ Q+ Q+ Q+\ncomp: b1 X2.2 X1.2 Q- Q- Q- Q-\n");
    auto ms = applicable_moves(d);
    REQUIRE(count_kind(ms, MoveKind::R2_remove) == 1);
    auto it = std::find_if(ms.begin(), ms.end(), [](const auto& m) { return m.kind == MoveKind::R2_remove; });
    CHECK(it->site == std::vector<int>{0, 1, 1, 1});
    CHECK(apply_move(d, *it) == ut("comp: a1 Q+ Q+ Q+ Q+\ncomp: b1 Q- Q- Q- Q-\n"));
    // A trefoil-like pattern without adjacent pairs has no bigon.
    Diagram tref = ut("comp: X1.1 Q+ X2.2 Q+ X3.1 Q+ X1.2 Q+ X2.1 X3.2\n");
    CHECK(count_kind(applicable_moves(tref), MoveKind::R2_remove) == 0);
  }

  TEST_CASE("R2 insert then remove") {
    Diagram d = ut("comp: a1 Q+ Q+ Q+ Q+\ncomp: b1 Q- Q- Q- Q-\n");
    MoveInstance ins = make(MoveKind::R2_insert, {0, 1, 1, 1});
    Diagram r = apply_move(d, ins);
    CHECK(r == ut("comp: a1 X1.1 X2.1 Q+ Q+ Q+ Q+\ncomp: b1 X2.2 X1.2 Q- Q- Q- Q-\n"));
    CHECK(validate(r).empty());
    CHECK(apply_move(r, make(MoveKind::R2_remove, {0, 1, 1, 1})) == d);
    ins.parallel = true;
    CHECK(apply_move(d, ins) == ut("comp: a1 X1.1 X2.1 Q+ Q+ Q+ Q+\ncomp: b1 X1.2 X2.2 Q- Q- Q- Q-\n"));
  }

  TEST_CASE("R3 twice is the identity") {
    Diagram d = ut("comp: X1.1 X2.1 Q+ X1.2 X3.1 Q+ X2.2 X3.2 Q+ Q+\n");
    auto ms = applicable_moves(d, {MoveKind::R3});
    REQUIRE(ms.size() == 1);
    Diagram once = apply_move(d, ms[0]);
    CHECK(once == ut("comp: X2.1 X1.1 Q+ X3.1 X1.2 Q+ X3.2 X2.2 Q+ Q+\n"));
    CHECK(isomorphic(apply_move(once, ms[0]), d));
  }

  TEST_CASE("kink slides") {
    Diagram d = ut("comp: L+ a1 Q+ Q+ Q+ Q+\n");
    auto ms = applicable_moves(d, {MoveKind::KinkSlide});
    REQUIRE(ms.size() == 1);
    CHECK(apply_move(d, ms[0]) == ut("comp: a1 L+ Q+ Q+ Q+ Q+\n"));
    CHECK_THROWS_AS(apply_move(d, make(MoveKind::KinkSlide, {0, 2})), InapplicableMove);
  }

  TEST_CASE("stab then destab at the same site is the identity") {
    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
      Diagram d = random_diagram(rng, t % 2 ? Mode::Smooth : Mode::CuspSmooth);
      auto stabs = applicable_moves(d, {MoveKind::Stab});
      const auto& s = stabs[rng() % stabs.size()];
      Diagram up = apply_move(d, s);
      CHECK(apply_move(up, make(MoveKind::Destab, s.site)) == d);
    }
  }

  TEST_CASE("non-transvection moves preserve lift classes and validity") {
    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
      Diagram d = random_diagram(rng, t % 2 ? Mode::Smooth : Mode::CuspSmooth);
      auto m = random_move(rng, d);
      REQUIRE(m);
      Diagram r = apply_move(d, *m);
      CHECK(validate(r).empty());
      CHECK(lift_classes(r, bundle_for(r)) == lift_classes(d, bundle_for(d)));
    }
  }

  TEST_CASE("inapplicable moves") {
    Diagram d = ut("comp: Q+ Q+ Q+ Q+\n");
    CHECK_THROWS_AS(apply_move(d, make(MoveKind::Destab, {0, 0})), InapplicableMove);
    CHECK_THROWS_AS(apply_move(d, make(MoveKind::R2_remove, {0, 0, 0, 2})), InapplicableMove);
    CHECK_THROWS_AS(apply_move(d, make(MoveKind::R3, {0, 0})), InapplicableMove);
    CHECK_THROWS_AS(apply_move(d, make(MoveKind::Stab, {3, 0})), InapplicableMove);
    CHECK_THROWS_AS(apply_move(d, make(MoveKind::Stab, {0, 9})), InapplicableMove);
  }

  TEST_CASE("kink expansion") {
    Diagram d = ut("comp: Q+ L+ Q+ Q+ Q+\n");
    Diagram e = expand_kink(d, 0, 1);
    CHECK(e == ut("comp: Q+ X1.1 Q+ Q+ Q+ Q+ X1.2 Q+ Q+ Q+\n"));
    CHECK(turning_number(e, 0) == turning_number(d, 0));
    CHECK(self_intersection_count(e) == self_intersection_count(d));
    CHECK(lift_class(e, bundle_for(e), 0) == lift_class(d, bundle_for(d), 0));
    CHECK(contract_kink(e, 0, 1) == d);
    Diagram r = ut("comp: Q+ L- Q+ Q+ Q+ Q+ Q+\n");
    CHECK(expand_kink(r, 0, 1) == ut("comp: Q+ X1.1 Q- Q- Q- Q- X1.2 Q+ Q+ Q+ Q+ Q+\n"));
    CHECK_THROWS_AS(expand_kink(d, 0, 0), InapplicableMove);
    CHECK_THROWS_AS(expand_kink(pt("comp: Q+ C^ Q+ Q+ Cv Q+\n"), 0, 1), InapplicableMove);
    // Contraction also works when the expanded kink wraps around the end of the component.
    Diagram w = ut("comp: Q+ Q+ Q+ Q+ X1.2 Q+ Q+ Q+ Q+ X1.1\n");
    Diagram cw = contract_kink(w, 0, 9);
    CHECK(isomorphic(cw, ut("comp: L+ Q+ Q+ Q+ Q+\n")));
  }

  TEST_CASE("transvections") {
    Diagram d = ut("comp: a1 Q+ Q+ Q+ Q+\n");
    MoveInstance t;
    t.kind = MoveKind::Transvection;
    t.curve = {TwistCurve{d.surface.alphabet().parse("b1"), 1, {{0, 1, 1}}}};
    Diagram r = apply_move(d, t);
    CHECK(r == ut("comp: a1 L+ Q+ Q+ Q+ Q+\n"));
    auto before = lift_class(d, bundle_for(d), 0), after = lift_class(r, bundle_for(r), 0);
    CHECK(after.base == before.base);
    CHECK(after.fiber == reduce_mod(before.fiber + 1, 2));

    Diagram p = pt("comp: a1 Q+ Q+ Q+ Q+\n");
    t.curve[0].weight = 2;
    Diagram rp = apply_move(p, t);
    CHECK(std::count(rp.components[0].begin(), rp.components[0].end(), Event::cusp_up()) == 2);
    CHECK(lift_class(rp, bundle_for(rp), 0).fiber == reduce_mod(lift_class(p, bundle_for(p), 0).fiber + 2, 4));
    t.curve[0].weight = 1;
    CHECK_THROWS_AS(apply_move(p, t), InapplicableMove);

    t.curve[0].sites = {{0, 9, 1}};
    CHECK_THROWS_AS(apply_move(d, t), MissingReference);
    t.curve[0].sites = {{0, 1, 1}};
    t.curve[0].weight = 0;
    CHECK_THROWS_AS(apply_move(d, t), InapplicableMove);
    CHECK(transvection_shift({TwistCurve{{1}, 3, {{0, 0, 1}, {0, 2, -1}, {1, 0, 1}}}}, 2) ==
          std::vector<std::int64_t>{0, 3});
  }
}
