#include "slnrect/sl2bridge.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "slnrect/errors.hpp"
#include "slnrect/random.hpp"
#include "slnrect/rectifier.hpp"

namespace slnrect {

namespace {

UniPoly& coordinate(C3Triple& tr, C3Axis axis) {
  switch (axis) {
    case C3Axis::x: return tr.g1;
    case C3Axis::y: return tr.g2;
    case C3Axis::z: break;
  }
  return tr.g3;
}

MPoly c3_poly(const UniPoly& p, C3Axis var) { return MPoly::from_uni(p, 3, static_cast<std::size_t>(var)); }

void require_embedding(std::span<const UniPoly> coords, const GroebnerBudget& gb) {
  EmbeddingReport r = embedding_report(coords, gb);
  if (!r.is_embedding) throw Error(ErrorKind::not_an_embedding, "curve is not an embedding", r.to_string());
}

// q with g1 * (g3 + q(g1)) == 1 mod g2, q of degree < deg g2, if one exists.
std::optional<UniPoly> solve_inverse_shift(const UniPoly& g1, const UniPoly& g2, const UniPoly& g3) {
  const int m = g2.degree();
  Xgcd e = xgcd(g1, g2);
  if (e.g != UniPoly(1)) return std::nullopt;
  UniPoly target = divmod(e.u - g3, g2).remainder;

  ScalarMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  UniPoly power(1);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) a(j, k) = power.coeff(j);
    power = divmod(power * g1, g2).remainder;
  }
  std::vector<Scalar> rhs;
  for (int j = 0; j < m; ++j) rhs.push_back(target.coeff(j));
  auto sol = solve_linear(std::move(a), std::move(rhs));
  if (!sol) return std::nullopt;
  UniPoly q(std::move(*sol));
  if (!divmod(g1 * (g3 + q.compose(g1)) - UniPoly(1), g2).remainder.is_zero()) return std::nullopt;
  return q;
}

// Shift candidates 0, 1, -1, 2, -2, ...
long shift_candidate(long k) { return (k % 2 == 1) ? (k + 1) / 2 : -(k / 2); }

MPoly random_y_payload(Rng& rng, long size) {
  const long bound = 1 + size / 4;
  std::vector<Term> terms;
  const std::vector<Exponents> monos{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 0, 1}, {2, 0, 0}, {0, 0, 2}};
  for (const auto& e : monos) {
    if (rng.uniform(0, 1) == 0) continue;
    terms.push_back(Term{e, Scalar(rng.nonzero(bound))});
  }
  if (terms.empty()) terms.push_back(Term{{1, 0, 0}, Scalar(rng.nonzero(bound))});
  return MPoly::from_terms(3, std::move(terms));
}

}  // namespace

C3Triple apply_c3_word(const C3Word& w, const C3Triple& tr) {
  C3Triple cur = tr;
  for (const auto& mv : w.moves) {
    if (const auto* e = std::get_if<C3Elementary>(&mv)) {
      if (e->h.nvars() != 3) throw Error(ErrorKind::size_mismatch, "tame move payload needs 3 variables");
      if (e->h.degree_in(static_cast<std::size_t>(e->axis)) > 0)
        throw Error(ErrorKind::invalid_support, "tame move payload involves its own coordinate");
      std::vector<UniPoly> vals{cur.g1, cur.g2, cur.g3};
      coordinate(cur, e->axis) += e->h.eval_uni(vals);
    } else {
      const ScalarMatrix& a = std::get<C3Linear>(mv).a;
      if (a.rows() != 3 || a.cols() != 3) throw Error(ErrorKind::size_mismatch, "linear move needs a 3x3 matrix");
      if (determinant(a).is_zero()) throw Error(ErrorKind::not_unimodular, "linear move is singular", "0");
      std::vector<UniPoly> old{cur.g1, cur.g2, cur.g3};
      std::vector<UniPoly> out(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i] += a(i, j) * old[j];
      cur = {out[0], out[1], out[2]};
    }
  }
  return cur;
}

bool divisibility_holds(const C3Triple& tr) {
  if (tr.g2.is_zero()) return false;
  return divmod(tr.g1 * tr.g3 - UniPoly(1), tr.g2).remainder.is_zero();
}

SlCurve lift_c3_to_sl2(const C3Triple& tr) {
  UniPoly num = tr.g1 * tr.g3 - UniPoly(1);
  if (tr.g2.is_zero()) throw Error(ErrorKind::divisibility_fails, "g2 is zero", num.to_string());
  DivMod qr = divmod(num, tr.g2);
  if (!qr.remainder.is_zero())
    throw Error(ErrorKind::divisibility_fails, "g2 does not divide g1*g3 - 1", qr.remainder.to_string());
  PolyMatrix m(2, 2);
  m(0, 0) = tr.g1;
  m(0, 1) = qr.quotient;
  m(1, 0) = tr.g2;
  m(1, 1) = tr.g3;
  return SlCurve::validate(std::move(m));
}

DivisibilityResult attempt_divisibility(const C3Triple& tr, std::uint64_t seed, std::size_t budget,
                                        const GroebnerBudget& gb) {
  std::vector<UniPoly> coords{tr.g1, tr.g2, tr.g3};
  require_embedding(coords, gb);
  if (divisibility_holds(tr)) return {{}, tr};

  for (std::size_t trial = 0; trial < budget; ++trial) {
    C3Word w;
    if (trial > 0) {
      Rng rng(derive_seed(seed, trial));
      w.moves.push_back(C3Elementary{C3Axis::y, random_y_payload(rng, static_cast<long>(trial))});
    }
    C3Triple cur = apply_c3_word(w, tr);
    if (cur.g2.is_zero()) continue;
    if (divisibility_holds(cur)) return {std::move(w), std::move(cur)};

    const long candidates = 2L * cur.g2.degree() + 2;
    for (long k = 0; k < candidates; ++k) {
      const long c = shift_candidate(k);
      UniPoly g1 = cur.g1 + UniPoly(c);
      if (gcd(g1, cur.g2) != UniPoly(1)) continue;
      auto q = solve_inverse_shift(g1, cur.g2, cur.g3);
      if (!q) break;
      C3Word full = w;
      if (c != 0) full.moves.push_back(C3Elementary{C3Axis::x, MPoly::constant(3, Scalar(c))});
      if (!q->is_zero()) full.moves.push_back(C3Elementary{C3Axis::z, c3_poly(*q, C3Axis::x)});
      C3Triple out = apply_c3_word(full, tr);
      if (!divisibility_holds(out)) break;
      return {std::move(full), std::move(out)};
    }
  }
  throw Error(ErrorKind::heuristic_failed, "no tame normalization found within the attempt budget",
              std::to_string(budget));
}

PlaneCurve apply_plane_word(const PlaneTameWord& w, const PlaneCurve& c) {
  PlaneCurve cur = c;
  for (const auto& mv : w.moves) {
    if (const auto* e = std::get_if<PlaneElementary>(&mv)) {
      if (e->axis == PlaneAxis::x) cur.first += e->h.compose(cur.second);
      else cur.second += e->h.compose(cur.first);
    } else {
      const ScalarMatrix& a = std::get<PlaneLinear>(mv).a;
      if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::size_mismatch, "plane linear move needs a 2x2 matrix");
      cur = {a(0, 0) * cur.first + a(0, 1) * cur.second, a(1, 0) * cur.first + a(1, 1) * cur.second};
    }
  }
  return cur;
}

PlaneTameWord random_plane_word(std::uint64_t seed, std::size_t len, unsigned max_deg) {
  Rng rng(seed);
  PlaneTameWord w;
  PlaneAxis axis = rng.uniform(0, 1) ? PlaneAxis::x : PlaneAxis::z;
  for (std::size_t k = 0; k < len; ++k) {
    const int deg = static_cast<int>(rng.uniform(1, std::max(1U, max_deg)));
    std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1);
    for (int e = 1; e < deg; ++e) c[static_cast<std::size_t>(e)] = Scalar(rng.uniform(-3, 3));
    c.back() = Scalar(rng.nonzero(3));
    w.moves.push_back(PlaneElementary{axis, UniPoly(std::move(c))});
    axis = axis == PlaneAxis::x ? PlaneAxis::z : PlaneAxis::x;
    if (rng.uniform(0, 2) == 0) {
      ScalarMatrix a(2, 2);
      do {
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) a(i, j) = Scalar(rng.uniform(-2, 2));
      } while (determinant(a).is_zero());
      w.moves.push_back(PlaneLinear{std::move(a)});
    }
  }
  return w;
}

UniPoly AffineReparam::as_poly() const { return UniPoly({b, a}); }

UniPoly AffineReparam::inverse_poly() const {
  Scalar inv = a.inverse();
  return UniPoly({-b * inv, inv});
}

AmsResult ams_straighten(const PlaneCurve& c, const GroebnerBudget& gb) {
  std::vector<UniPoly> coords{c.first, c.second};
  require_embedding(coords, gb);
  if (gcd(c.first, c.second) != UniPoly(1))
    throw Error(ErrorKind::precondition_failed, "curve passes through the origin", gcd(c.first, c.second).to_string());

  AmsResult res;
  UniPoly x = c.first;
  UniPoly z = c.second;
  while (!x.is_constant() && !z.is_constant()) {
    const int dx = x.degree();
    const int dz = z.degree();
    const bool reduce_z = dx <= dz;
    const UniPoly& lo = reduce_z ? x : z;
    UniPoly& hi = reduce_z ? z : x;
    const int dl = lo.degree();
    const int dh = hi.degree();
    if (dh % dl != 0)
      throw Error(ErrorKind::degree_obstruction, "neither degree divides the other",
                  std::to_string(dx) + " " + std::to_string(dz));
    const int k = dh / dl;
    Scalar coef = -hi.lead();
    for (int e = 0; e < k; ++e) coef /= lo.lead();
    UniPoly h = UniPoly::monomial(coef, k);
    hi += h.compose(lo);
    res.word.moves.push_back(PlaneElementary{reduce_z ? PlaneAxis::z : PlaneAxis::x, std::move(h)});
  }

  ScalarMatrix a(2, 2);
  if (x.is_constant()) {
    const Scalar& v = x.coeff(0);
    a(0, 0) = v.inverse();
    a(1, 1) = v;
  } else {
    const Scalar& v = z.coeff(0);
    a(0, 1) = v.inverse();
    a(1, 0) = -v;
  }
  if (a != ScalarMatrix::identity(2)) {
    PlaneCurve after = apply_plane_word(PlaneTameWord{{PlaneLinear{a}}}, {x, z});
    x = after.first;
    z = after.second;
    res.word.moves.push_back(PlaneLinear{std::move(a)});
  }
  if (x != UniPoly(1) || z.degree() != 1)
    throw Error(ErrorKind::precondition_failed, "straightening did not reach a line", z.to_string());
  res.reparam = AffineReparam{z.coeff(1), z.coeff(0)};
  return res;
}

AutWord lift_plane_word(const PlaneTameWord& w) {
  const EntryContext ctx{2};
  AutWord out(2);
  for (const auto& mv : w.moves) {
    if (const auto* e = std::get_if<PlaneElementary>(&mv)) {
      if (!e->h.coeff(0).is_zero())
        throw Error(ErrorKind::precondition_failed, "elementary plane move does not fix the origin", e->h.to_string());
      UniPoly shifted(std::vector<Scalar>(e->h.coeffs().begin() + (e->h.is_zero() ? 0 : 1), e->h.coeffs().end()));
      if (e->axis == PlaneAxis::z) {
        out.push_back(LeftElem{1, 0, MPoly::from_uni(shifted, ctx.nvars(), ctx.x(0, 0))});
      } else {
        out.push_back(LeftElem{0, 1, MPoly::from_uni(shifted, ctx.nvars(), ctx.x(1, 0))});
      }
    } else {
      out.push_back(GlPair{std::get<PlaneLinear>(mv).a});
    }
  }
  return out;
}

SlCurve reparametrize(const SlCurve& c, const UniPoly& p) {
  PolyMatrix m = c.entries();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).compose(p);
  return SlCurve::validate(std::move(m));
}

Sl2Rectification rectify_sl2(const SlCurve& c, const GroebnerBudget& gb) {
  if (c.n() != 2) throw Error(ErrorKind::size_mismatch, "SL2 path needs a 2x2 curve", std::to_string(c.n()));
  Sl2Rectification res;
  res.ams = ams_straighten({c(0, 0), c(1, 0)}, gb);
  res.word = lift_plane_word(res.ams.word);
  SlCurve straight = apply_word(res.word, c);
  // straight has first column (1, a t + b); rectify it in the parameter s = a t + b.
  auto fin = final_rectify(reparametrize(straight, res.ams.reparam.inverse_poly()));
  res.word.append(fin.first);
  if (apply_word(res.word, c) != reparametrize(SlCurve::standard(2), res.ams.reparam.as_poly()))
    throw Error(ErrorKind::replay_mismatch, "SL2 rectification does not replay");
  return res;
}

}  // namespace slnrect
