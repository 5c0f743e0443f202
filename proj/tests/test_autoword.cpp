#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "slnrect/autoword.hpp"
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

ScalarMatrix smat(std::initializer_list<std::initializer_list<long>> rows) {
  ScalarMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

// Random point of SL_n(Q): random unipotent factors around a diagonal.
ScalarMatrix random_sl(std::mt19937& gen, std::size_t n) {
  std::uniform_int_distribution<long> c(-4, 4);
  ScalarMatrix l = ScalarMatrix::identity(n), u = ScalarMatrix::identity(n), d = ScalarMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) l(i, j) = Scalar(c(gen));
      if (i < j) u(i, j) = Scalar(c(gen));
    }
  Scalar prod(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    long v = c(gen);
    if (v == 0) v = 3;
    d(i, i) = Scalar(v);
    prod *= Scalar(v);
  }
  d(n - 1, n - 1) = prod.inverse();
  return l * d * u;
}

}  // namespace

TEST_CASE("generator validity") {
  EntryContext ctx{2};
  MPoly x11 = ctx.var(0, 0), x21 = ctx.var(1, 0), x12 = ctx.var(0, 1);
  CHECK_NOTHROW(check_generator(LeftElem{0, 1, x21.pow(2)}, 2));
  CHECK(kind_of([&] { check_generator(LeftElem{0, 1, x11}, 2); }) == ErrorKind::invalid_support);
  CHECK(kind_of([&] { check_generator(RightElem{0, 1, x12}, 2); }) == ErrorKind::invalid_support);
  CHECK_NOTHROW(check_generator(RightElem{0, 1, x11 * x21}, 2));
  CHECK(kind_of([&] { check_generator(LeftElem{0, 1, MPoly::variable(6, ctx.t())}, 2); }) ==
        ErrorKind::invalid_support);
  CHECK(kind_of([&] { check_generator(LeftElem{1, 1, x12}, 2); }) == ErrorKind::invalid_support);
  CHECK(kind_of([&] { check_generator(ConstLeft{smat({{2, 0}, {0, 1}})}, 2); }) == ErrorKind::not_unimodular);
  CHECK(kind_of([&] { check_generator(GlPair{smat({{1, 2}, {2, 4}})}, 2); }) == ErrorKind::not_unimodular);
  CHECK_NOTHROW(check_generator(GlPair{smat({{2, 0}, {0, 1}})}, 2));

  const UniPoly s = UniPoly::variable();
  CHECK_NOTHROW(check_generator(CurveRightMul{mat({{1, -s}, {0, 1}})}, 2));
  CHECK(kind_of([&] { check_generator(CurveRightMul{mat({{1, 0}, {s, 1}})}, 2); }) ==
        ErrorKind::first_column_not_preserved);
  CHECK(kind_of([&] { check_generator(CurveRightMul{mat({{1, 0}, {0, s}})}, 2); }) == ErrorKind::not_unimodular);
  CHECK(kind_of([&] { check_generator(ConstLeft{ScalarMatrix::identity(3)}, 2); }) == ErrorKind::size_mismatch);
}

TEST_CASE("apply_word examples") {
  auto c = curve({{1, T}, {T, 1 + T * T}});
  CHECK(apply_word(AutWord(2), c) == c);

  const UniPoly s = UniPoly::variable();
  AutWord w(2, {CurveRightMul{mat({{1, -s}, {0, 1}})}});
  CHECK(apply_word(w, c) == SlCurve::standard(2));

  AutWord g(2, {GlPair{smat({{2, 0}, {0, 1}})}});
  auto out = apply_word(g, SlCurve::standard(2));
  CHECK(out(0, 0) == UniPoly(2));
  CHECK(out(0, 1) == UniPoly(0));
  CHECK(out(1, 0) == T);
  CHECK(out(1, 1) == UniPoly(Scalar::rational(1, 2)));

  // LeftElem(1,2,x21): row 1 += x21 * row 2.
  EntryContext ctx{2};
  AutWord l(2, {LeftElem{0, 1, ctx.var(1, 0)}});
  auto e = apply_word(l, SlCurve::standard(2));
  CHECK(e(0, 0) == 1 + T * T);
  CHECK(e(0, 1) == T);

  CHECK(kind_of([&] { apply_word(AutWord(3), c); }) == ErrorKind::size_mismatch);
}

TEST_CASE("apply_word_matrix") {
  ScalarMatrix x = smat({{1, 2}, {1, 3}});
  CHECK(apply_word_matrix(AutWord(2), x) == x);
  CHECK(kind_of([&] { apply_word_matrix(AutWord(2), smat({{1, 0}, {0, 2}})); }) == ErrorKind::not_unimodular);

  EntryContext ctx{2};
  MPoly p = ctx.var(1, 0) * ctx.var(1, 1) + MPoly::constant(6, Scalar(1));
  AutWord l(2, {LeftElem{0, 1, p}});
  ScalarMatrix e = ScalarMatrix::identity(2);
  e(0, 1) = Scalar(1 * 3 + 1);
  CHECK(apply_word_matrix(l, x) == e * x);
}

TEST_CASE("invert_word examples") {
  EntryContext ctx{2};
  AutWord w(2, {LeftElem{0, 1, ctx.var(1, 0)}});
  auto inv = invert_word(w);
  REQUIRE(inv.size() == 1);
  CHECK(std::get<LeftElem>(inv.generators()[0]).p == -ctx.var(1, 0));
  CHECK(invert_word(AutWord(2)).empty());
}

TEST_CASE("random_word determinism and validity") {
  CHECK(random_word(0, 3, 0, 0).empty());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = random_word(seed, 3, 5, 2);
    auto b = random_word(seed, 3, 5, 2);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 5);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a.generators()[k].index() == b.generators()[k].index());
      CHECK_NOTHROW(check_generator(a.generators()[k], 3));
    }
  }
}

TEST_CASE("words map the standard curve to embeddings") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (std::size_t n : {2, 3}) {
      auto c = apply_word(random_word(seed, n, 3, 1), SlCurve::standard(n));
      CHECK(is_embedding(c).is_embedding);
    }
  }
}

TEST_CASE("round trip and commutation with evaluation") {
  std::mt19937 gen(11);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 2 + seed % 3;
    auto w = random_word(seed, n, 6, 2);
    auto base = apply_word(random_word(seed + 1000, n, 2, 1), SlCurve::standard(n));
    auto image = apply_word(w, base);
    CHECK(apply_word(invert_word(w), image) == base);
    CHECK(invert_word(invert_word(w)).size() == w.size());

    for (long t0 : {-2L, 0L, 3L}) {
      CHECK(apply_word_matrix(w, base.at(Scalar(t0))) == image.at(Scalar(t0)));
    }
    ScalarMatrix x = random_sl(gen, n);
    CHECK(apply_word_matrix(invert_word(w), apply_word_matrix(w, x)) == x);
  }
}

TEST_CASE("curve right multiplication fixes the first column") {
  std::mt19937 gen(5);
  const UniPoly s = UniPoly::variable();
  auto m = mat({{1, s * s - 1, 3}, {0, 1, s}, {0, 0, 1}}) * mat({{1, 0, 0}, {0, 1, 0}, {0, Scalar(2) * s + 1, 1}});
  AutWord w(3, {CurveRightMul{m}});
  for (int k = 0; k < 10; ++k) {
    ScalarMatrix x = random_sl(gen, 3);
    ScalarMatrix y = apply_word_matrix(w, x);
    for (std::size_t i = 0; i < 3; ++i) CHECK(y(i, 0) == x(i, 0));
    CHECK(determinant(y).is_one());
  }
}
