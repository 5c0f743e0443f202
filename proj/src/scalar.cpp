#include "slnrect/scalar.hpp"

#include <stdexcept>

namespace slnrect {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0;
  return cmp(a.im_, b.im_) < 0;
}

namespace {

std::string imag_text(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "i";
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return "(" + imag_text(im_) + ")";
  std::string out = "(" + re_.get_str();
  out += sgn(im_) > 0 ? "+" : "";
  out += imag_text(im_) + ")";
  return out;
}

}  // namespace slnrect
