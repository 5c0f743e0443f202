#include "doctest.h"
#include "helpers.hpp"
#include "slnrect/errors.hpp"
#include "slnrect/random.hpp"
#include "slnrect/textio.hpp"

using namespace slnrect;
using namespace testing_helpers;

namespace {

ParseError parse_error_of(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error raised");
  return ParseError(0, 0, "unreachable");
}

const VarNames kXY{"x", "y"};

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }

}  // namespace

TEST_CASE("polynomial parser") {
  const MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  CHECK(parse_mpoly("x^2*y - 3/2*y + 1", kXY) == x * x * y - q(3, 2) * y + MPoly::constant(2, q(1)));
  CHECK(parse_mpoly("-(x + y)^2", kXY) == -((x + y) * (x + y)));
  CHECK(parse_mpoly("(3/2+1/2i)*x", kXY) == Scalar(mpq_class(3, 2), mpq_class(1, 2)) * x);
  CHECK(parse_mpoly("(-i)*y + 2i", kXY) == Scalar(0, -1) * y + MPoly::constant(2, Scalar(0, 2)));
  CHECK(parse_mpoly("  0 ", kXY).is_zero());
  CHECK(parse_mpoly("4/6", {}).constant_term() == q(2, 3));
  CHECK(parse_mpoly("x - -y", kXY) == x + y);

  auto e = parse_error_of([] { parse_mpoly("x + * y", kXY, 4, 10); });
  CHECK(e.line() == 4);
  CHECK(e.column() == 14);
  e = parse_error_of([] { parse_mpoly("x + w", kXY); });
  CHECK(e.column() == 5);
  CHECK(std::string(e.what()).find("unknown variable 'w'") != std::string::npos);
  CHECK(parse_error_of([] { parse_mpoly("1/0", kXY); }).column() == 3);
  CHECK(parse_error_of([] { parse_mpoly("(x + y", kXY); }).column() == 7);
  CHECK(parse_error_of([] { parse_mpoly("", kXY); }).column() == 1);
  CHECK(parse_error_of([] { parse_mpoly("x^", kXY); }).column() == 3);
  CHECK(parse_error_of([] { parse_mpoly("x^99999", kXY); }).column() == 8);
}

TEST_CASE("canonical renderings parse back") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    std::vector<Scalar> c;
    const long d = rng.uniform(0, 6);
    for (long e = 0; e <= d; ++e)
      c.emplace_back(mpq_class(rng.uniform(-20, 20), rng.uniform(1, 7)), mpq_class(rng.uniform(-2, 2), rng.uniform(1, 3)));
    UniPoly p(std::move(c));
    CHECK(parse_unipoly(p.to_string()) == p);
    CHECK(parse_unipoly(p.to_string("s"), "s") == p);
  }
}

TEST_CASE("curve format") {
  SlCurve e = SlCurve::standard(3);
  const std::string text = format_curve(e);
  CHECK(text.starts_with("slnrectify/1\ncurve n=3\nentry 1 1 : 1\n"));
  CHECK(text.find("entry 3 1 : t\n") != std::string::npos);
  CHECK(parse_curve(text) == e);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SlCurve f = apply_word(random_word(seed, 3, 5, 4), e);
    CHECK(format_curve(parse_curve(format_curve(f))) == format_curve(f));
    CHECK(parse_curve(format_curve(f)) == f);
  }

  // Comments, blank lines, indentation, any entry order.
  CHECK(parse_curve("slnrectify/1\n# identity-like\ncurve n=2\n\n  entry 2 2 : 1\nentry 1 1 : 1\nentry 2 1 : t\nentry 1 2 : 0\n") ==
        SlCurve::standard(2));

  const std::string header = "slnrectify/1\ncurve n=2\n";
  CHECK(parse_error_of([&] { parse_curve(header + "entry 1 1 : 1\n"); }).line() == 2);
  auto e1 = parse_error_of([&] { parse_curve(header + "entry 1 3 : 1\n"); });
  CHECK(e1.line() == 3);
  CHECK(e1.column() == 9);
  auto e2 = parse_error_of([&] { parse_curve(header + "entry 1 1 : 1\nentry 1 1 : 1\n"); });
  CHECK(e2.line() == 4);
  auto e3 = parse_error_of([&] {
    parse_curve(header + "entry 1 1 : 1\nentry 1 2 : 0\nentry 2 1 : t +\nentry 2 2 : 1\n");
  });
  CHECK(e3.line() == 5);
  CHECK(e3.column() == 16);
  // det == 2
  CHECK(parse_error_of([&] { parse_curve(header + "entry 1 1 : 2\nentry 1 2 : 0\nentry 2 1 : 0\nentry 2 2 : 1\n"); }).line() == 2);
  CHECK(parse_error_of([] { parse_curve("curve n=2\n"); }).line() == 1);
  CHECK(parse_error_of([] { parse_curve("slnrectify/1\ncurve n=0\n"); }).column() == 9);
  CHECK(parse_error_of([] { parse_curve("slnrectify/1\n"); }).line() == 2);
}

TEST_CASE("word format") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    AutWord w = random_word(seed, 3 + seed % 2, 5, 3);
    const std::string text = format_word(w);
    AutWord back = parse_word(text);
    CHECK(format_word(back) == text);
    CHECK(apply_word(back, SlCurve::standard(w.n())) == apply_word(w, SlCurve::standard(w.n())));
  }
  const EntryContext ctx{3};
  PolyMatrix m = PolyMatrix::identity(3);
  m(0, 2) = P({0, 0, 1});
  AutWord w(3, {LeftElem{0, 2, ctx.var(2, 0) * ctx.var(1, 1)}, CurveRightMul{m}});
  const std::string text = format_word(w);
  CHECK(text == "slnrectify/1\nword n=3\nleft 1 3 : x2_2*x3_1\ncurve_right_mul : 1, 0, s^2 ; 0, 1, 0 ; 0, 0, 1\n");
  CHECK(format_word(parse_word(text)) == text);

  // Payload involving its own row.
  auto e = parse_error_of([] { parse_word("slnrectify/1\nword n=2\nleft 1 2 : x1_1\n"); });
  CHECK(e.line() == 3);
  CHECK(parse_error_of([] { parse_word("slnrectify/1\nword n=2\nleft 1 2 : t\n"); }).line() == 3);
  CHECK(parse_error_of([] { parse_word("slnrectify/1\nword n=2\nconst_left : 2, 0 ; 0, 1\n"); }).line() == 3);
  CHECK(parse_error_of([] { parse_word("slnrectify/1\nword n=2\nconst_left : 1, 0 ; 0\n"); }).line() == 3);
  CHECK(parse_error_of([] { parse_word("slnrectify/1\nword n=2\nspin 1 2 : 1\n"); }).column() == 1);
}

TEST_CASE("triple and tame word formats") {
  C3Triple tr{T, P({1, 0, -2}), P({0, 1, 0, 1})};
  const std::string text = format_triple(tr);
  CHECK(text == "slnrectify/1\ntriple\ng1 : t\ng2 : -2*t^2 + 1\ng3 : t^3 + t\n");
  CHECK(parse_triple(text) == tr);
  CHECK(parse_error_of([] { parse_triple("slnrectify/1\ntriple\ng1 : t\ng3 : t\ng2 : t\n"); }).line() == 4);

  C3Word w;
  w.moves.push_back(C3Elementary{C3Axis::y, parse_mpoly("x*z + 2", {"x", "y", "z"})});
  ScalarMatrix a = ScalarMatrix::identity(3);
  a(0, 1) = q(-1, 2);
  w.moves.push_back(C3Linear{a});
  const std::string wt = format_c3_word(w);
  CHECK(wt == "slnrectify/1\ntame n=3\nshift y : x*z + 2\nlinear : 1, -1/2, 0 ; 0, 1, 0 ; 0, 0, 1\n");
  CHECK(format_c3_word(parse_c3_word(wt)) == wt);
  CHECK(parse_error_of([] { parse_c3_word("slnrectify/1\ntame n=3\nshift y : y\n"); }).line() == 3);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PlaneTameWord pw = random_plane_word(seed, 4, 3);
    const std::string pt = format_plane_word(pw);
    CHECK(format_plane_word(parse_plane_word(pt)) == pt);
    PlaneCurve c{P({1}), T};
    CHECK(apply_plane_word(parse_plane_word(pt), c) == apply_plane_word(pw, c));
  }
  CHECK(parse_error_of([] { parse_plane_word("slnrectify/1\ntame n=2\nshift z : x + 1\n"); }).line() == 3);
}

TEST_CASE("certificate format round-trips") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    SlCurve f = apply_word(random_word(seed, 3, 5, 4), SlCurve::standard(3));
    RunConfig cfg;
    cfg.seed = seed;
    Certificate cert = rectify(f, cfg);
    const std::string text = format_certificate(cert);
    Certificate back = parse_certificate(text);
    CHECK(format_certificate(back) == text);
    CHECK(back.input == cert.input);
    CHECK(back.final == cert.final);
    REQUIRE(back.stages.size() == cert.stages.size());
    for (std::size_t k = 0; k < back.stages.size(); ++k) {
      CHECK(back.stages[k].name == cert.stages[k].name);
      CHECK(back.stages[k].facts == cert.stages[k].facts);
      CHECK(back.stages[k].bezout.has_value() == cert.stages[k].bezout.has_value());
    }
    CHECK_FALSE(verify_certificate(back).empty());
  }
}
