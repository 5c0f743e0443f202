#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "slnrect/errors.hpp"
#include "slnrect/rectifier.hpp"

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

SlCurve corpus_curve(std::uint64_t seed) {
  return apply_word(random_word(seed, 3, 5, 4), SlCurve::standard(3));
}

RunConfig config(std::uint64_t seed) {
  RunConfig cfg;
  cfg.seed = seed;
  return cfg;
}

const UniPoly S = UniPoly::variable();

}  // namespace

TEST_CASE("normalize_rank") {
  // f(0) - f(1) has a zero third row.
  CHECK_FALSE(rank_conditions(curve({{1 + T * T, T, 0}, {T, 1, 0}, {0, 0, 1}})));

  auto e = SlCurve::standard(3);
  auto [w, d] = normalize_rank(e, config(1));
  CHECK(rank_conditions(d));
  CHECK(apply_word(w, e) == d);
  // The deterministic single-move pass keeps the degree small.
  CHECK(w.size() <= 6);
  CHECK(d.degree() <= 3);

  auto [w2, d2] = normalize_rank(d, config(1));
  CHECK(w2.empty());
  CHECK(d2 == d);

  RunConfig none = config(1);
  none.max_trials = 0;
  CHECK(kind_of([&] { normalize_rank(e, none); }) == ErrorKind::search_exhausted);
}

TEST_CASE("generic_projection") {
  CHECK(kind_of([] { generic_projection(SlCurve::standard(2), config(0)); }) == ErrorKind::precondition_failed);
  CHECK(kind_of([] { generic_projection(SlCurve::standard(3), config(0)); }) == ErrorKind::precondition_failed);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = normalize_rank(corpus_curve(seed), config(seed)).second;
    auto [w, d] = generic_projection(c, config(seed));
    REQUIRE(w.size() == 1);
    CHECK(std::holds_alternative<ConstRight>(w.generators()[0]));
    CHECK(columns_embed(d, 2));
    CHECK(apply_word(w, c) == d);
  }
}

TEST_CASE("Bezout tildes") {
  std::vector<UniPoly> row{UniPoly(0), T * T, T + 1};
  auto tildes = bezout_tildes(row);
  REQUIRE(tildes.size() == 2);
  CHECK(tildes[0] == T);
  CHECK(tildes[1] == -(T * T) + T);
  CHECK(row[1] * tildes[0] + row[2] * tildes[1] == T - row[0]);

  std::vector<UniPoly> shared{UniPoly(3), T * T, T * (T + 1)};
  CHECK(kind_of([&] { bezout_tildes(shared); }) == ErrorKind::precondition_failed);
}

TEST_CASE("block section") {
  // Column 2 contains t itself: the section is that single entry.
  auto c = curve({{1, T, 0}, {0, 1, 0}, {0, 0, 1}});
  EntryContext ctx{3};
  MPoly tau = block_section(c);
  CHECK(tau == ctx.var(0, 1));

  // Block entries t^2 and t^4 + t: tau = x1_3 - x1_2^2.
  auto d = curve({{1, T * T, T.pow(4) + T}, {0, 1, 0}, {0, 0, 1}});
  MPoly sigma = block_section(d);
  CHECK(sigma == ctx.var(0, 2) - ctx.var(0, 1).pow(2));
}

TEST_CASE("straighten_first_column") {
  auto std_col = curve({{1, T, 0}, {0, 1, 0}, {T, T * T, 1}});
  REQUIRE(has_standard_first_column(std_col));
  auto [w0, d0] = straighten_first_column(std_col, config(0));
  CHECK(w0.empty());
  CHECK(d0 == std_col);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto c = corpus_curve(seed);
    auto n1 = normalize_rank(c, config(seed)).second;
    auto p = generic_projection(n1, config(seed)).second;
    std::optional<BezoutSolution> bz;
    auto [w, d] = straighten_first_column(p, config(seed), &bz);
    CHECK(has_standard_first_column(d));
    CHECK(apply_word(w, p) == d);
    REQUIRE(bz.has_value());
    const auto& base = bz->base;
    UniPoly sum;
    for (std::size_t k = 1; k < 3; ++k) sum += base(2, k) * bz->tildes[k - 1];
    CHECK(sum == T - base(2, 0));
    auto vals = base.flattened();
    vals.emplace_back();
    vals.emplace_back();
    CHECK(bz->section.eval_uni(vals) == T);
    for (std::size_t k = 0; k < bz->lifted.size(); ++k) {
      CHECK(bz->lifted[k] == compose(bz->tildes[k], bz->section));
      for (std::size_t v : bz->lifted[k].support()) CHECK(v % 3 != 0);
    }
  }
}

TEST_CASE("final_rectify") {
  auto c = curve({{1, T}, {T, 1 + T * T}});
  auto [w, d] = final_rectify(c);
  CHECK(d == SlCurve::standard(2));
  REQUIRE(w.size() == 1);
  const auto& m = std::get<CurveRightMul>(w.generators()[0]).m;
  CHECK(m == mat({{1, -S}, {0, 1}}));

  auto [we, de] = final_rectify(SlCurve::standard(3));
  CHECK(std::get<CurveRightMul>(we.generators()[0]).m == PolyMatrix::identity(3));
  CHECK(de == SlCurve::standard(3));

  CHECK(kind_of([] { final_rectify(curve({{1, 0}, {T * T, 1}})); }) == ErrorKind::precondition_failed);
}

TEST_CASE("rectify") {
  auto e = rectify(SlCurve::standard(3), config(0));
  CHECK(apply_word(e.word(), SlCurve::standard(3)) == SlCurve::standard(3));
  CHECK_NOTHROW(verify_certificate(e));

  CHECK(kind_of([] { rectify(SlCurve::standard(2), config(0)); }) == ErrorKind::unsupported_size);
  auto folded = curve({{1, 0, 0}, {0, 1, 0}, {T * T, 0, 1}});
  CHECK(kind_of([&] { rectify(folded, config(0)); }) == ErrorKind::not_an_embedding);

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto c = corpus_curve(seed);
    auto cert = rectify(c, config(seed));
    CHECK(apply_word(cert.word(), c) == SlCurve::standard(3));
    auto checks = verify_certificate(cert);
    CHECK(!checks.empty());

    auto again = rectify(c, config(seed));
    CHECK(again.word().size() == cert.word().size());
    CHECK(again.stages.size() == cert.stages.size());
    for (std::size_t k = 0; k < cert.stages.size(); ++k) CHECK(again.stages[k].curve == cert.stages[k].curve);
  }
}

TEST_CASE("tampered certificates are rejected") {
  auto c = corpus_curve(3);
  auto cert = rectify(c, config(3));
  REQUIRE(cert.stages.size() == 4);

  auto bad_curve = cert;
  auto entries = bad_curve.stages[1].curve.entries();
  // Swapping two rows keeps det = -1; negate one to stay in SL_3.
  for (std::size_t j = 0; j < 3; ++j) std::swap(entries(0, j), entries(1, j));
  for (std::size_t j = 0; j < 3; ++j) entries(0, j) = -entries(0, j);
  bad_curve.stages[1].curve = SlCurve::validate(entries);
  CHECK(kind_of([&] { verify_certificate(bad_curve); }) == ErrorKind::replay_mismatch);

  auto bad_fact = cert;
  bad_fact.stages[0].facts.push_back("final_is_standard");
  CHECK(kind_of([&] { verify_certificate(bad_fact); }) == ErrorKind::replay_mismatch);

  auto bad_bezout = cert;
  REQUIRE(bad_bezout.stages[2].bezout.has_value());
  bad_bezout.stages[2].bezout->tildes[0] += UniPoly(1);
  CHECK(kind_of([&] { verify_certificate(bad_bezout); }) == ErrorKind::replay_mismatch);

  auto unknown = cert;
  unknown.stages[3].facts.push_back("made_up");
  CHECK(kind_of([&] { verify_certificate(unknown); }) == ErrorKind::replay_mismatch);
}

TEST_CASE("final generators fix first columns of random matrices") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto cert = rectify(corpus_curve(seed), config(seed));
    if (cert.stages.empty()) continue;
    AutWord fin = cert.stages.back().word;
    for (int k = 0; k < 10; ++k) {
      // Lower times upper unitriangular: a random point of SL_3.
      ScalarMatrix l = ScalarMatrix::identity(3), u = ScalarMatrix::identity(3);
      l(1, 0) = Scalar(c(gen));
      l(2, 0) = Scalar(c(gen));
      l(2, 1) = Scalar(c(gen));
      u(0, 1) = Scalar(c(gen));
      u(0, 2) = Scalar(c(gen));
      u(1, 2) = Scalar(c(gen));
      ScalarMatrix x = l * u;
      ScalarMatrix y = apply_word_matrix(fin, x);
      for (std::size_t i = 0; i < 3; ++i) CHECK(y(i, 0) == x(i, 0));
    }
  }
}

TEST_CASE("equivalence") {
  auto f = corpus_curve(4);
  auto w = equivalence(f, f, config(4));
  CHECK(apply_word(w, f) == f);

  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto g = apply_word(random_word(seed + 500, 3, 3, 2), f);
    auto v = equivalence(f, g, config(seed));
    CHECK(apply_word(v, f) == g);
  }
  auto folded = curve({{1, 0, 0}, {0, 1, 0}, {T * T, 0, 1}});
  CHECK(kind_of([&] { equivalence(f, folded, config(0)); }) == ErrorKind::not_an_embedding);
  CHECK(kind_of([&] { equivalence(f, SlCurve::standard(4), config(0)); }) == ErrorKind::size_mismatch);
}
