#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace slnrect {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals, which GMP keeps in lowest terms with a
/// positive denominator, so equal values have equal representations.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order (real part first); used only for deterministic sorting.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

  /// Canonical text: "3/2", "-1", "(i)", "(-1/2i)", "(3/2+1/2i)".
  std::string to_string() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace slnrect
