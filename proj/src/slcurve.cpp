#include "slnrect/slcurve.hpp"

#include <algorithm>
#include <optional>

#include "slnrect/errors.hpp"

namespace slnrect {

SlCurve SlCurve::validate(PolyMatrix entries) {
  if (!entries.square()) throw Error(ErrorKind::size_mismatch, "curve matrix is not square");
  if (entries.rows() < 2) throw Error(ErrorKind::size_mismatch, "curve matrix size must be at least 2");
  UniPoly det = determinant(entries);
  if (det != UniPoly(1)) {
    throw Error(ErrorKind::not_unimodular, "determinant is " + det.to_string(), det.to_string());
  }
  return SlCurve(std::move(entries));
}

SlCurve SlCurve::standard(std::size_t n) {
  PolyMatrix m = PolyMatrix::identity(n);
  m(n - 1, 0) = UniPoly::variable();
  return SlCurve(std::move(m));
}

PolyMatrix SlCurve::derivative() const {
  PolyMatrix d(n(), n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) d(i, j) = entries_(i, j).derivative();
  return d;
}

int SlCurve::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) d = std::max(d, entries_(i, j).degree());
  return d;
}

std::vector<UniPoly> SlCurve::row(std::size_t i) const {
  std::vector<UniPoly> out;
  for (std::size_t j = 0; j < n(); ++j) out.push_back(entries_(i, j));
  return out;
}

std::vector<UniPoly> SlCurve::column(std::size_t j) const {
  std::vector<UniPoly> out;
  for (std::size_t i = 0; i < n(); ++i) out.push_back(entries_(i, j));
  return out;
}

std::vector<UniPoly> SlCurve::flattened() const {
  std::vector<UniPoly> out;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) out.push_back(entries_(i, j));
  return out;
}

std::string EmbeddingReport::to_string() const {
  if (is_embedding) return "embedding: yes";
  std::string out = "embedding: no\n";
  if (const auto* w = std::get_if<InjectivityWitness>(&witness)) {
    out += "witness: injectivity t0=" + w->t0.to_string() + " r0=" + w->r0.to_string();
  } else if (const auto* w = std::get_if<NonImmersiveWitness>(&witness)) {
    out += "witness: non-immersive t0=" + w->t0.to_string();
  } else if (std::holds_alternative<ConstantWitness>(witness)) {
    out += "witness: constant";
  } else if (const auto* w = std::get_if<SystemWitness>(&witness)) {
    out += "witness: system";
    VarNames names{"t", "r"};
    for (const auto& e : w->equations) out += "\n  " + e.to_string(names) + " = 0";
  }
  return out;
}

namespace {

const std::vector<long> kProbeValues{1, -1, 2, -2, 3, -3, 0, 4, -4, 5, -5};

// Roots r0 of the basis specialized at t = t0.
std::vector<Scalar> fibre_roots(const std::vector<MPoly>& basis, const Scalar& t0, bool& whole_line) {
  UniPoly g;
  for (const auto& b : basis) g = gcd(g, b.specialize(0, t0).to_uni(1));
  whole_line = g.is_zero();
  if (whole_line) return {};
  return gaussian_rational_roots(g);
}

}  // namespace

EmbeddingReport embedding_report(std::span<const UniPoly> coords, const GroebnerBudget& budget) {
  EmbeddingReport report;
  if (std::all_of(coords.begin(), coords.end(), [](const UniPoly& p) { return p.is_constant(); })) {
    report.witness = ConstantWitness{};
    return report;
  }
  std::vector<MPoly> diffs;
  for (const auto& p : coords) {
    MPoly q = divided_difference(p);
    if (!q.is_zero()) diffs.push_back(std::move(q));
  }
  if (is_unit_ideal(diffs, budget)) {
    report.is_embedding = true;
    return report;
  }

  // Common zeros exist. Eliminate r (lex r > t) and look for Q(i) points.
  MonomialOrder order{OrderKind::lex, {1, 0}};
  std::vector<MPoly> basis = groebner(diffs, order, budget);
  std::vector<Scalar> t_candidates;
  bool zero_dimensional_in_t = false;
  for (const auto& b : basis) {
    if (b.degree_in(1) <= 0) {
      t_candidates = gaussian_rational_roots(b.to_uni(0));
      zero_dimensional_in_t = true;
      break;
    }
  }
  if (!zero_dimensional_in_t) {
    for (long v : kProbeValues) t_candidates.emplace_back(v);
  }

  std::optional<InjectivityWitness> off_diagonal;
  std::optional<NonImmersiveWitness> diagonal;
  for (const auto& t0 : t_candidates) {
    bool whole_line = false;
    auto roots = fibre_roots(basis, t0, whole_line);
    if (whole_line) roots.push_back(t0 + Scalar(1));
    for (const auto& r0 : roots) {
      if (r0 != t0 && !off_diagonal) off_diagonal = InjectivityWitness{t0, r0};
      if (r0 == t0 && !diagonal) diagonal = NonImmersiveWitness{t0};
    }
    if (off_diagonal) break;
  }
  if (off_diagonal) report.witness = *off_diagonal;
  else if (diagonal) report.witness = *diagonal;
  else report.witness = SystemWitness{basis};
  return report;
}

bool replay_witness(std::span<const UniPoly> coords, const EmbeddingReport& report) {
  if (report.is_embedding) return std::holds_alternative<std::monostate>(report.witness);
  if (const auto* w = std::get_if<InjectivityWitness>(&report.witness)) {
    if (w->t0 == w->r0) return false;
    return std::all_of(coords.begin(), coords.end(), [&](const UniPoly& p) { return p(w->t0) == p(w->r0); });
  }
  if (const auto* w = std::get_if<NonImmersiveWitness>(&report.witness)) {
    return std::all_of(coords.begin(), coords.end(),
                       [&](const UniPoly& p) { return p.derivative()(w->t0).is_zero(); });
  }
  if (std::holds_alternative<ConstantWitness>(report.witness)) {
    return std::all_of(coords.begin(), coords.end(), [](const UniPoly& p) { return p.is_constant(); });
  }
  if (const auto* w = std::get_if<SystemWitness>(&report.witness)) {
    // Every divided difference must lie in the ideal the system generates.
    MonomialOrder order{OrderKind::lex, {1, 0}};
    auto basis = groebner(w->equations, order);
    if (basis.size() == 1 && basis[0].is_constant()) return false;
    for (const auto& p : coords) {
      if (!normal_form(divided_difference(p), basis, order).is_zero()) return false;
    }
    return !w->equations.empty();
  }
  return false;
}

EmbeddingReport is_embedding(const SlCurve& c, const GroebnerBudget& budget) {
  auto coords = c.flattened();
  return embedding_report(coords, budget);
}

bool rank_conditions(const SlCurve& c) {
  ScalarMatrix diff = c.at(Scalar(0)) - c.at(Scalar(1));
  if (determinant(diff).is_zero()) return false;
  return !determinant(evaluate(c.derivative(), Scalar(0))).is_zero();
}

}  // namespace slnrect
