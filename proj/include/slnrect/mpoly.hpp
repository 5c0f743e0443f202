#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slnrect/scalar.hpp"
#include "slnrect/unipoly.hpp"

namespace slnrect {

using Exponents = std::vector<std::uint32_t>;
using VarNames = std::vector<std::string>;

struct Term {
  Exponents exps;
  Scalar coeff;
};

/// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
///
/// Terms are kept sorted by lex order with variable 0 largest, highest term
/// first, without zero coefficients. This canonical order is independent of
/// any monomial order a Groebner computation uses internally.
class MPoly {
public:
  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t k);
  /// p(t) placed on variable `var`.
  static MPoly from_uni(const UniPoly& p, std::size_t nvars, std::size_t var);
  /// Sorts and merges arbitrary terms.
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t k) const;
  /// Indices of the variables that actually occur, ascending.
  std::vector<std::size_t> support() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  MPoly operator-() const;
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  Scalar eval(std::span<const Scalar> point) const;
  /// Substitutes values[k] for variable k.
  UniPoly eval_uni(std::span<const UniPoly> values) const;
  MPoly specialize(std::size_t var, const Scalar& value) const;
  /// Requires that only `var` occurs.
  UniPoly to_uni(std::size_t var) const;
  /// Moves variable k to index target[k] of a new context of size new_nvars.
  MPoly remap(std::size_t new_nvars, std::span<const std::size_t> target) const;

  std::string to_string(const VarNames& names) const;

private:
  void normalize();
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// True if a > b in lex order with variable 0 largest.
bool lex_greater(const Exponents& a, const Exponents& b);

/// p(inner)
MPoly compose(const UniPoly& p, const MPoly& inner);

/// The exact polynomial q(t, r) with q * (t - r) == p(t) - p(r), on two
/// variables (t = 0, r = 1).
MPoly divided_difference(const UniPoly& p);

}  // namespace slnrect
