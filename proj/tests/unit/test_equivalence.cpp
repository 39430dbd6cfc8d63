#include <doctest.h>

#include <numeric>

#include "../support.hpp"
#include "canonlift/errors.hpp"
#include "canonlift/json_io.hpp"

using namespace canonlift;
using namespace testsupport;
using K = EquivalenceVerdict::Kind;

namespace {

Diagram ut(const std::string& body) { return parse("surface genus=2 boundary=0\nbundle UT\n" + body); }
const CircleBundle kUT(Surface(2, 0), BundleKind::UnitTangent);

// Brute force: every combination of generator multiples in [-e, e] added to delta.
bool reachable_brute(const std::vector<std::vector<std::int64_t>>& shifts, const std::vector<std::int64_t>& delta,
                     std::int64_t e) {
  const std::size_t g = shifts.size();
  std::vector<std::int64_t> k(g, -e);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < delta.size() && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < g; ++j) s += k[j] * shifts[j][i];
      ok = reduce_mod(s - delta[i], e) == 0;
    }
    if (ok) return true;
    std::size_t j = 0;
    while (j < g && ++k[j] > e) k[j++] = -e;
    if (j == g) return false;
  }
}

}  // namespace

TEST_SUITE("equivalence") {
  TEST_CASE("stabilized diagram is one move away") {
    Diagram d1 = ut("comp: a1 Q+ Q+ Q+ Q+\n");
    Diagram d2 = ut("comp: a1 Q+ L+ L- Q+ Q+ Q+\n");
    auto v = equivalent_bounded(d1, d2, kUT, {});
    REQUIRE(v.kind == K::Equivalent);
    CHECK(v.certificate.size() == 1);
    CHECK(v.certificate[0].kind == MoveKind::Stab);
    CHECK(isomorphic(replay(d1, v.certificate), d2));
  }

  TEST_CASE("isomorphic diagrams need no moves") {
    Diagram d1 = ut("comp: a1 Q+ Q+ Q+ Q+\n");
    Diagram d2 = ut("comp: Q+ Q+ a1 Q+ Q+\n");
    auto v = equivalent_bounded(d1, d2, kUT, {});
    CHECK(v.kind == K::Equivalent);
    CHECK(v.certificate.empty());
  }

  TEST_CASE("distinguished by invariants") {
    auto v = equivalent_bounded(ut("comp: Q+ Q+ Q+ Q+\n"), ut("comp: Q+ Q+ Q+ Q+\ncomp: Q+ Q+ Q+ Q+\n"), kUT, {});
    CHECK(v.kind == K::Distinguished);
    CHECK(v.invariant == "component_count");
    auto h = equivalent_bounded(ut("comp: a1 Q+ Q+ Q+ Q+\n"), ut("comp: b1 Q+ Q+ Q+ Q+\n"), kUT, {});
    CHECK(h.invariant == "shadow_homology");
    auto l = equivalent_bounded(ut("comp: a1 Q+ Q+ Q+ Q+\n"), ut("comp: a1 Q+ Q+ Q+ Q+ L+\n"), kUT, {});
    CHECK(l.invariant == "lift_class");
  }

  TEST_CASE("transvections reach shifted fibres") {
    Diagram d1 = ut("comp: a1 Q+ Q+ Q+ Q+\n");
    Diagram d2 = ut("comp: a1 L+ Q+ Q+ Q+ Q+\n");
    Budget b;
    b.transvections = {{TwistCurve{d1.surface.alphabet().parse("b1"), 1, {{0, 1, 1}}}}};
    auto v = equivalent_bounded(d1, d2, kUT, b);
    REQUIRE(v.kind == K::Equivalent);
    CHECK(v.certificate.front().kind == MoveKind::Transvection);
    CHECK(certificate_valid(d1, d2, v.certificate));
    // A generator meeting the curve twice (with the same sign) only shifts by even amounts.
    Budget even;
    even.transvections = {{TwistCurve{d1.surface.alphabet().parse("b1"), 1, {{0, 1, 1}, {0, 2, 1}}}}};
    CircleBundle custom = CircleBundle::custom(Surface(2, 0), 4);
    auto w = equivalent_bounded(d1, d2, custom, even);
    CHECK(w.kind == K::Distinguished);
    CHECK(w.invariant == "lift_class");
  }

  TEST_CASE("reachable shift subgroup agrees with brute force") {
    Rng rng(31);
    for (int t = 0; t < 300; ++t) {
      std::int64_t e = uniform(rng, 1, 6);
      std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
      std::vector<std::vector<std::int64_t>> shifts(static_cast<std::size_t>(uniform(rng, 0, 2)));
      for (auto& s : shifts)
        for (std::size_t i = 0; i < n; ++i) s.push_back(uniform(rng, -3, 3));
      std::vector<std::int64_t> delta;
      for (std::size_t i = 0; i < n; ++i) delta.push_back(uniform(rng, -5, 5));
      CHECK(shift_reachable(shifts, delta, e) == reachable_brute(shifts, delta, e));
    }
    CHECK(shift_reachable({{2}}, {4}, 0));
    CHECK_FALSE(shift_reachable({{2}}, {3}, 0));
    CHECK_FALSE(shift_reachable({}, {1}, 0));
  }

  TEST_CASE("reversed certificates replay backwards") {
    Rng rng(41);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
      Diagram d = random_diagram(rng, t % 2 ? Mode::Smooth : Mode::CuspSmooth);
      Diagram e = d;
      for (int k = 0; k < 2; ++k) e = apply_move(e, *random_move(rng, e));
      auto v = equivalent_bounded(d, e, bundle_for(d), {});
      if (v.kind != K::Equivalent) continue;
      auto back = reverse_certificate(d, v.certificate);
      REQUIRE(back);
      CHECK(isomorphic(replay(e, *back), d));
      ++checked;
    }
    CHECK(checked == 40);
  }

  TEST_CASE("budget exhaustion gives unknown") {
    Diagram d1 = ut("comp: a1 Q+ Q+ Q+ Q+\n");
    Diagram d2 = ut("comp: a1 X1.1 X2.1 Q+ X3.1 X2.2 Q+ X1.2 X3.2 Q+ Q+ L+ L- L- L+\n");
    Budget tiny;
    tiny.max_moves = 1;
    tiny.max_states = 5;
    CHECK(equivalent_bounded(d1, d2, kUT, tiny).kind == K::Unknown);
  }

  TEST_CASE("search is deterministic across thread counts") {
    Rng rng(77);
    for (int t = 0; t < 10; ++t) {
      Diagram d = random_diagram(rng, Mode::Smooth);
      Diagram e = d;
      for (int k = 0; k < 3; ++k) e = apply_move(e, *random_move(rng, e));
      Budget one, four;
      four.threads = 4;
      auto a = equivalent_bounded(d, e, kUT, one), b = equivalent_bounded(d, e, kUT, four);
      CHECK(a.kind == b.kind);
      CHECK(a.certificate == b.certificate);
    }
  }

  TEST_CASE("surface and mode checks") {
    Diagram p = parse("surface genus=2 boundary=0\nbundle PT\ncomp: Q+ Q+ Q+ Q+\n");
    CHECK_THROWS_AS(equivalent_bounded(ut("comp: Q+ Q+ Q+ Q+\n"), p, kUT, {}), ModeMismatch);
    Diagram torus = parse("surface genus=1 boundary=0\nbundle UT\ncomp: Q+ Q+ Q+ Q+\n");
    CHECK_THROWS_AS(equivalent_bounded(torus, torus, CircleBundle(Surface(1, 0), BundleKind::UnitTangent), {}),
                    UnsupportedSurface);
  }

  TEST_CASE("relabeling") {
    Diagram d = ut("comp: a1 Q+ Q+ Q+ Q+\n");
    Relabeling swap{{0, d.surface.alphabet().parse("a2")}, {1, d.surface.alphabet().parse("b2")},
                    {2, d.surface.alphabet().parse("a1")}, {3, d.surface.alphabet().parse("b1")}};
    CHECK(relabel_generators(d, swap) == ut("comp: a2 Q+ Q+ Q+ Q+\n"));
    Relabeling bad{{0, d.surface.alphabet().parse("b1")}};
    CHECK_THROWS_AS(relabel_generators(d, bad), Error);
  }

  TEST_CASE("certificate json round trip") {
    Surface s(2, 0);
    MoveInstance a;
    a.kind = MoveKind::R2_insert;
    a.site = {0, 1, 0, 3};
    a.parallel = true;
    MoveInstance t;
    t.kind = MoveKind::Transvection;
    t.curve = {TwistCurve{s.alphabet().parse("a1 b2"), -2, {{0, 1, 1}}}};
    std::vector<MoveInstance> cert{t, a};
    Json j = certificate_to_json(cert, s);
    CHECK(certificate_from_json(Json::parse(j.dump()), s) == cert);
    CHECK_THROWS_AS(certificate_from_json(Json::parse(R"([{"kind":"Teleport"}])"), s), Error);
  }
}
