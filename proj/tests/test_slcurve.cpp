#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "slnrect/errors.hpp"

using namespace slnrect;
using namespace testing_helpers;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::parse_error;
}

}  // namespace

TEST_CASE("validate accepts unimodular matrices and rejects others") {
  CHECK_NOTHROW(curve({{1, 0}, {T, 1}}));
  CHECK_NOTHROW(curve({{1 + T * T, T}, {T, 1}}));
  CHECK(kind_of([] { curve({{2, 0}, {0, 1}}); }) == ErrorKind::not_unimodular);
  CHECK(kind_of([] { curve({{T, 0}, {0, 1}}); }) == ErrorKind::not_unimodular);
  CHECK(kind_of([] { SlCurve::validate(PolyMatrix(2, 3)); }) == ErrorKind::size_mismatch);
  CHECK(kind_of([] { SlCurve::validate(PolyMatrix(1, 1)); }) == ErrorKind::size_mismatch);

  try {
    curve({{T, 0}, {0, 1}});
  } catch (const Error& e) {
    CHECK(e.detail() == "t");
  }
}

TEST_CASE("standard curve") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto e = SlCurve::standard(n);
    CHECK(e.n() == n);
    CHECK(e(n - 1, 0) == T);
    CHECK(e(0, 0) == UniPoly(1));
    CHECK(is_embedding(e).is_embedding);
  }
}

TEST_CASE("embedding examples") {
  auto yes = is_embedding(curve({{1 + T * T, T}, {T, 1}}));
  CHECK(yes.is_embedding);
  CHECK(std::holds_alternative<std::monostate>(yes.witness));

  auto c = curve({{1, 0}, {T * T, 1}});
  auto no = is_embedding(c);
  CHECK_FALSE(no.is_embedding);
  REQUIRE(std::holds_alternative<InjectivityWitness>(no.witness));
  auto w = std::get<InjectivityWitness>(no.witness);
  CHECK(w.t0 != w.r0);
  CHECK(c.at(w.t0) == c.at(w.r0));
  CHECK(w.t0 == Scalar(1));
  CHECK(w.r0 == Scalar(-1));
  CHECK(replay_witness(c.flattened(), no));
}

TEST_CASE("non-immersive and constant witnesses") {
  std::vector<UniPoly> cusp{T * T, T * T * T};
  auto r = embedding_report(cusp);
  CHECK_FALSE(r.is_embedding);
  REQUIRE(std::holds_alternative<NonImmersiveWitness>(r.witness));
  CHECK(std::get<NonImmersiveWitness>(r.witness).t0 == Scalar(0));
  CHECK(replay_witness(cusp, r));

  std::vector<UniPoly> constant{P({3}), P({1})};
  auto k = embedding_report(constant);
  CHECK_FALSE(k.is_embedding);
  CHECK(std::holds_alternative<ConstantWitness>(k.witness));
  CHECK(replay_witness(constant, k));

  // The double point t = +-sqrt(2) has no coordinates in Q(i).
  std::vector<UniPoly> node{T * T - 2, T * (T * T - 2)};
  auto nd = embedding_report(node);
  CHECK_FALSE(nd.is_embedding);
  CHECK(replay_witness(node, nd));

  // A forged witness must not replay.
  EmbeddingReport forged{false, InjectivityWitness{Scalar(1), Scalar(2)}};
  CHECK_FALSE(replay_witness(cusp, forged));
}

TEST_CASE("embedding agrees with a point-collision oracle on random plane curves") {
  // Oracle: a curve (t, g(t)) always embeds; (t^2, t^3 + a t) embeds iff a != 0
  // fails... instead compare against the explicit double point of (t^2, t h(t^2)).
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly g = P({coeff(gen), coeff(gen), coeff(gen), coeff(gen)});
    std::vector<UniPoly> graph{T, g};
    CHECK(embedding_report(graph).is_embedding);

    // (t^2, t*h(t^2)) identifies t and -t exactly where h(t^2) == 0.
    long a = coeff(gen);
    UniPoly h = P({a, 1});
    std::vector<UniPoly> folded{T * T, T * h.compose(T * T)};
    auto r = embedding_report(folded);
    CHECK_FALSE(r.is_embedding);
    CHECK(replay_witness(folded, r));
  }
}

TEST_CASE("rank conditions") {
  CHECK(rank_conditions(curve({{1 + T * T, T}, {T, 1}})));
  CHECK_FALSE(rank_conditions(SlCurve::standard(3)));
  CHECK_FALSE(rank_conditions(curve({{1, 0}, {0, 1}})));
}
