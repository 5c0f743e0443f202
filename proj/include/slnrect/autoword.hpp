#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "slnrect/matrix.hpp"
#include "slnrect/mpoly.hpp"
#include "slnrect/slcurve.hpp"

namespace slnrect {

/// Variable layout for polynomials in the entries of an n x n matrix:
/// x_{ij} (0-based) is variable i*n + j, followed by t and s.
struct EntryContext {
  std::size_t n;

  std::size_t nvars() const { return n * n + 2; }
  std::size_t x(std::size_t i, std::size_t j) const { return i * n + j; }
  std::size_t t() const { return n * n; }
  std::size_t s() const { return n * n + 1; }
  /// "x1_1", ..., "t", "s" (1-based entry names).
  VarNames names() const;
  MPoly var(std::size_t i, std::size_t j) const { return MPoly::variable(nvars(), x(i, j)); }
};

/// X |-> E_{ij}(p(X)) * X; p must not involve row i.
struct LeftElem {
  std::size_t i;
  std::size_t j;
  MPoly p;
};

/// X |-> X * E_{ij}(q(X)); q must not involve column j.
struct RightElem {
  std::size_t i;
  std::size_t j;
  MPoly q;
};

/// X |-> B * X with det B = 1.
struct ConstLeft {
  ScalarMatrix b;
};

/// X |-> X * B with det B = 1.
struct ConstRight {
  ScalarMatrix b;
};

/// X |-> A * X * diag(1, ..., 1, 1/det A); acts on the first column as v |-> A v.
struct GlPair {
  ScalarMatrix a;
};

/// X |-> X * M(x_{n1}) with M a matrix of polynomials in s, det M == 1 and
/// first column e_1. Column 1 (hence x_{n1}) is fixed, which makes the map
/// invertible.
struct CurveRightMul {
  PolyMatrix m;
};

using Generator = std::variant<LeftElem, RightElem, ConstLeft, ConstRight, GlPair, CurveRightMul>;

/// Throws Error(invalid_support | not_unimodular | first_column_not_preserved
/// | size_mismatch) when g is not an automorphism generator of SL_n.
const Generator& check_generator(const Generator& g, std::size_t n);

/// A finite composition of generators, applied first to last.
class AutWord {
public:
  explicit AutWord(std::size_t n) : n_(n) {}
  AutWord(std::size_t n, std::vector<Generator> gens);

  std::size_t n() const { return n_; }
  const std::vector<Generator>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  void push_back(Generator g);
  void append(const AutWord& other);

private:
  std::size_t n_;
  std::vector<Generator> gens_;
};

SlCurve apply_word(const AutWord& w, const SlCurve& c);
/// Action on a single matrix of SL_n(Q(i)).
ScalarMatrix apply_word_matrix(const AutWord& w, const ScalarMatrix& x);
AutWord invert_word(const AutWord& w);

/// Seeded word of 1..max_len generators (none if max_len == 0) drawn from
/// LeftElem, RightElem, ConstLeft, ConstRight and GlPair with small integer
/// coefficients and payload degree at most max_deg.
AutWord random_word(std::uint64_t seed, std::size_t n, std::size_t max_len, unsigned max_deg);

/// Random B in SL_n(Q) with integer entries in [-bound, bound] before the
/// last column is divided by the determinant.
ScalarMatrix random_unimodular(std::uint64_t seed, std::size_t n, long bound);

}  // namespace slnrect
