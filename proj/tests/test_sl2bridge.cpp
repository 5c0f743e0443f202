#include "doctest.h"
#include "helpers.hpp"
#include "slnrect/errors.hpp"
#include "slnrect/random.hpp"
#include "slnrect/rectifier.hpp"
#include "slnrect/sl2bridge.hpp"

using namespace slnrect;
using namespace testing_helpers;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::parse_error, "unreachable");
}

UniPoly random_poly(Rng& rng, int max_deg) {
  std::vector<Scalar> c;
  const int d = static_cast<int>(rng.uniform(0, max_deg));
  for (int k = 0; k <= d; ++k) c.emplace_back(rng.uniform(-3, 3));
  return UniPoly(std::move(c));
}

ScalarMatrix random_sl2(Rng& rng) {
  // E_12(a) E_21(b) E_12(c) with small rationals.
  auto r = [&] { return Scalar::rational(rng.uniform(-9, 9), rng.uniform(1, 4)); };
  ScalarMatrix u = ScalarMatrix::identity(2), l = ScalarMatrix::identity(2), v = ScalarMatrix::identity(2);
  u(0, 1) = r();
  l(1, 0) = r();
  v(0, 1) = r();
  return u * l * v;
}

}  // namespace

TEST_CASE("lift_c3_to_sl2 examples") {
  SlCurve a = lift_c3_to_sl2({T, P({1}), P({0})});
  CHECK(a == curve({{T, P({-1})}, {P({1}), P({0})}}));

  SlCurve b = lift_c3_to_sl2({T, P({1}), T * T});
  CHECK(b == curve({{T, P({-1, 0, 0, 1})}, {P({1}), T * T}}));
  CHECK(determinant(b.entries()) == UniPoly(1));

  Error e = error_of([] { lift_c3_to_sl2({T, T, T}); });
  CHECK(e.kind() == ErrorKind::divisibility_fails);
  CHECK(e.detail() == "-1");
}

TEST_CASE("lift_c3_to_sl2 inverts the first-column/last-row projection") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SlCurve f = apply_word(random_word(seed, 2, 4, 3), SlCurve::standard(2));
    if (f(1, 0).is_zero()) continue;
    SlCurve g = lift_c3_to_sl2({f(0, 0), f(1, 0), f(1, 1)});
    CHECK(g == f);
    CHECK(determinant(g.entries()) == UniPoly(1));
  }
}

TEST_CASE("attempt_divisibility examples") {
  auto same = attempt_divisibility({T, P({1}), P({0})}, 0, 8);
  CHECK(same.word.moves.empty());
  CHECK(same.triple == C3Triple{T, P({1}), P({0})});

  auto r = attempt_divisibility({T, T, T}, 0, 8);
  REQUIRE(r.word.moves.size() == 2);
  const auto& m1 = std::get<C3Elementary>(r.word.moves[0]);
  const auto& m2 = std::get<C3Elementary>(r.word.moves[1]);
  CHECK(m1.axis == C3Axis::x);
  CHECK(m1.h == MPoly::constant(3, Scalar(1)));
  CHECK(m2.axis == C3Axis::z);
  CHECK(m2.h == MPoly::constant(3, Scalar(1)));
  CHECK(r.triple == C3Triple{P({1, 1}), T, P({1, 1})});
  // (t+1)^2 - 1 = t^2 + 2t is divisible by t.
  CHECK(divmod(P({0, 2, 1}), T).remainder.is_zero());
  CHECK(lift_c3_to_sl2(r.triple) == curve({{P({1, 1}), P({2, 1})}, {T, P({1, 1})}}));

  Error e = error_of([] { attempt_divisibility({T, T, T}, 0, 0); });
  CHECK(e.kind() == ErrorKind::heuristic_failed);
  CHECK(e.detail() == "0");

  CHECK(error_of([] { attempt_divisibility({T * T, T * T, P({0})}, 0, 8); }).kind() == ErrorKind::not_an_embedding);
}

TEST_CASE("attempt_divisibility successes replay") {
  Rng rng(7);
  int successes = 0;
  for (int k = 0; k < 30; ++k) {
    C3Triple tr{T + random_poly(rng, 0), random_poly(rng, 3), random_poly(rng, 3)};
    if (k % 3 == 1) std::swap(tr.g1, tr.g3);
    if (tr.g2.is_zero()) tr.g2 = T * T;
    try {
      auto r = attempt_divisibility(tr, static_cast<std::uint64_t>(k), 16);
      ++successes;
      CHECK(apply_c3_word(r.word, tr) == r.triple);
      CHECK(divmod(r.triple.g1 * r.triple.g3 - UniPoly(1), r.triple.g2).remainder.is_zero());
      CHECK(determinant(lift_c3_to_sl2(r.triple).entries()) == UniPoly(1));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::heuristic_failed);
    }
  }
  CHECK(successes >= 20);
}

TEST_CASE("ams_straighten examples") {
  auto id = ams_straighten({P({1}), T});
  CHECK(id.word.moves.empty());
  CHECK(id.reparam.a == Scalar(1));
  CHECK(id.reparam.b == Scalar(0));

  CHECK(error_of([] { ams_straighten({T, T * T}); }).kind() == ErrorKind::precondition_failed);
  // t^3 + t takes equal values at distinct points, so this is not an embedding.
  CHECK(error_of([] { ams_straighten({P({1}), P({0, 1, 0, 1})}); }).kind() == ErrorKind::not_an_embedding);

  auto sq = ams_straighten({P({1, 0, 1}), P({0, 1})});
  PlaneCurve out = apply_plane_word(sq.word, {P({1, 0, 1}), T});
  CHECK(out.first == P({1}));
  CHECK(out.second == sq.reparam.as_poly());
}

TEST_CASE("ams_straighten reaches a line on random embedded lines") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    PlaneTameWord w = random_plane_word(seed, 1 + seed % 4, 3);
    PlaneCurve c = apply_plane_word(w, {P({1}), T});
    AmsResult r = ams_straighten(c);
    PlaneCurve out = apply_plane_word(r.word, c);
    CHECK(out.first == P({1}));
    CHECK(out.second == r.reparam.as_poly());
    CHECK_FALSE(r.reparam.a.is_zero());
  }
}

TEST_CASE("lift_plane_word examples and commutation") {
  CHECK(lift_plane_word({}).empty());

  ScalarMatrix d(2, 2);
  d(0, 0) = Scalar(2);
  d(1, 1) = Scalar::rational(1, 2);
  AutWord lin = lift_plane_word({{PlaneLinear{d}}});
  REQUIRE(lin.size() == 1);
  CHECK(std::get<GlPair>(lin.generators()[0]).a == d);

  AutWord el = lift_plane_word({{PlaneElementary{PlaneAxis::z, T * T}}});
  REQUIRE(el.size() == 1);
  const auto& le = std::get<LeftElem>(el.generators()[0]);
  const EntryContext ctx{2};
  CHECK(le.i == 1);
  CHECK(le.j == 0);
  CHECK(le.p == ctx.var(0, 0));

  CHECK(error_of([] { lift_plane_word({{PlaneElementary{PlaneAxis::x, P({1, 1})}}}); }).kind() ==
        ErrorKind::precondition_failed);

  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PlaneTameWord w = random_plane_word(seed, 3, 3);
    for (const auto& mv : w.moves) {
      AutWord lifted = lift_plane_word({{mv}});
      for (int k = 0; k < 5; ++k) {
        ScalarMatrix x = random_sl2(rng);
        ScalarMatrix y = apply_word_matrix(lifted, x);
        // Plane action evaluated directly on the numeric first column.
        Scalar px = x(0, 0), pz = x(1, 0);
        if (const auto* e = std::get_if<PlaneElementary>(&mv)) {
          if (e->axis == PlaneAxis::x) px += e->h(pz);
          else pz += e->h(px);
        } else {
          const auto& a = std::get<PlaneLinear>(mv).a;
          Scalar nx = a(0, 0) * px + a(0, 1) * pz;
          pz = a(1, 0) * px + a(1, 1) * pz;
          px = nx;
        }
        CHECK(y(0, 0) == px);
        CHECK(y(1, 0) == pz);
      }
    }
  }
}

TEST_CASE("rectify_sl2 on curves with embedded first column") {
  const EntryContext ctx{2};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AutWord w = lift_plane_word(random_plane_word(seed, 1 + seed % 3, 3));
    // A column-2 move keeps the first column.
    w.push_back(RightElem{0, 1, MPoly::from_uni(P({1, 0, static_cast<long>(seed % 3) + 1}), ctx.nvars(), ctx.x(1, 0))});
    SlCurve f = apply_word(w, SlCurve::standard(2));
    Sl2Rectification r = rectify_sl2(f);
    SlCurve target = reparametrize(SlCurve::standard(2), r.ams.reparam.as_poly());
    CHECK(apply_word(r.word, f) == target);
    CHECK(reparametrize(apply_word(r.word, f), r.ams.reparam.inverse_poly()) == SlCurve::standard(2));
  }
}

TEST_CASE("rectify_sl2 needs an embedded first column") {
  // First column (1 + t^2, t^2) is even in t, so t and -t collide.
  SlCurve f = curve({{P({1, 0, 1}), P({1})}, {T * T, P({1})}});
  CHECK(error_of([&] { rectify_sl2(f); }).kind() == ErrorKind::not_an_embedding);
}
