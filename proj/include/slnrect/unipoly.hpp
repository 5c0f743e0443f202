#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slnrect/scalar.hpp"

namespace slnrect {

/// Dense univariate polynomial over Q(i). Coefficients are stored in
/// ascending degree with no trailing zeros, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  UniPoly(long c) : UniPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<Scalar> ascending);

  /// The parameter t itself.
  static UniPoly variable() { return monomial(Scalar(1), 1); }
  static UniPoly monomial(const Scalar& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Scalar& coeff(int k) const;
  const Scalar& lead() const { return coeffs_.back(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Scalar& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend UniPoly operator*(const Scalar& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  Scalar operator()(const Scalar& x) const;
  /// this(inner(t))
  UniPoly compose(const UniPoly& inner) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;

  /// Canonical rendering, highest degree first: "(3/2+1/2i)*t^2 - t + 1".
  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Scalar> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// a / b when the division is exact; throws std::domain_error otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct Xgcd {
  UniPoly g;
  UniPoly u;
  UniPoly v;
};

/// u*a + v*b = g with g the monic gcd and deg u < deg b - deg g.
Xgcd xgcd(const UniPoly& a, const UniPoly& b);

struct XgcdList {
  UniPoly g;
  std::vector<UniPoly> cofactors;
};

/// Bezout cofactors for a list: sum cofactors[k] * ps[k] == g, g monic gcd.
///
/// Computed by a left-to-right extended Euclid cascade. Afterwards every
/// cofactor but the one of the last nonzero input (the anchor) is reduced
/// modulo anchor / gcd(input, anchor) whenever that modulus is nonconstant
/// and the cofactor's degree reaches it; the quotient is moved onto the
/// anchor's cofactor. Throws Error(all_zero_input) if every input is zero.
XgcdList xgcd_list(std::span<const UniPoly> ps);

}  // namespace slnrect

namespace slnrect {

/// Distinct roots of p that lie in Q(i), sorted by canonical_less.
///
/// Candidates come from numeric root approximation followed by rational
/// reconstruction; only candidates that vanish exactly are returned, so the
/// result is sound but may miss roots whose denominators are very large.
std::vector<Scalar> gaussian_rational_roots(const UniPoly& p);

}  // namespace slnrect
