#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slnrect/groebner.hpp"
#include "slnrect/matrix.hpp"
#include "slnrect/mpoly.hpp"

namespace slnrect {

/// A polynomial map C -> SL_n, t |-> entries(t), with det == 1 identically.
class SlCurve {
public:
  /// Returns the curve iff det(entries) == 1 as a polynomial identity;
  /// otherwise throws Error(not_unimodular) carrying the determinant.
  static SlCurve validate(PolyMatrix entries);
  /// E_{n1}(t): the identity with t in the lower-left corner.
  static SlCurve standard(std::size_t n);

  std::size_t n() const { return entries_.rows(); }
  const PolyMatrix& entries() const { return entries_; }
  const UniPoly& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  ScalarMatrix at(const Scalar& t0) const { return evaluate(entries_, t0); }
  PolyMatrix derivative() const;
  int degree() const;
  std::vector<UniPoly> column(std::size_t j) const;
  std::vector<UniPoly> row(std::size_t i) const;
  /// Entries in row-major order.
  std::vector<UniPoly> flattened() const;

  friend bool operator==(const SlCurve& a, const SlCurve& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const SlCurve& a, const SlCurve& b) { return !(a == b); }

private:
  explicit SlCurve(PolyMatrix entries) : entries_(std::move(entries)) {}
  PolyMatrix entries_;
};

struct InjectivityWitness {
  Scalar t0;
  Scalar r0;
};

struct NonImmersiveWitness {
  Scalar t0;
};

struct ConstantWitness {};

/// Defining equations in (t, r) of the common zeros when none of them could
/// be written down with coordinates in Q(i).
struct SystemWitness {
  std::vector<MPoly> equations;
};

using EmbeddingWitness =
    std::variant<std::monostate, InjectivityWitness, NonImmersiveWitness, ConstantWitness, SystemWitness>;

struct EmbeddingReport {
  bool is_embedding = false;
  EmbeddingWitness witness;

  std::string to_string() const;
};

/// Closed-embedding test for an arbitrary polynomial map t |-> coords(t).
///
/// Nonconstant polynomial maps from C are proper, so the map embeds iff the
/// divided differences of its coordinates have no common zero in C^2: an
/// off-diagonal zero (t0, r0) has coords(t0) == coords(r0), a diagonal zero
/// has coords'(t0) == 0.
EmbeddingReport embedding_report(std::span<const UniPoly> coords, const GroebnerBudget& budget = {});

/// True iff every witness in the report reproduces its failure exactly.
bool replay_witness(std::span<const UniPoly> coords, const EmbeddingReport& report);

EmbeddingReport is_embedding(const SlCurve& c, const GroebnerBudget& budget = {});

/// det(c(0) - c(1)) != 0 and det(c'(0)) != 0.
bool rank_conditions(const SlCurve& c);

}  // namespace slnrect
