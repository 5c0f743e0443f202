#include "slnrect/unipoly.hpp"

#include <stdexcept>

#include "slnrect/errors.hpp"

namespace slnrect {

namespace {
const Scalar kZero{};
}

UniPoly::UniPoly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
  UniPoly p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar());
  p.coeffs_.back() = c;
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

namespace {

// Coefficients scaled to Gaussian integers by one common denominator.
struct IntegerForm {
  mpz_class den = 1;
  std::vector<mpz_class> re;
  std::vector<mpz_class> im;
  bool real = true;
};

IntegerForm integer_form(const std::vector<Scalar>& c) {
  IntegerForm f;
  for (const auto& x : c) {
    mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), x.im().get_den_mpz_t());
    f.real = f.real && x.is_real();
  }
  f.re.resize(c.size());
  if (!f.real) f.im.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    f.re[k] = c[k].re().get_num() * (f.den / c[k].re().get_den());
    if (!f.real) f.im[k] = c[k].im().get_num() * (f.den / c[k].im().get_den());
  }
  return f;
}

void convolve_add(std::vector<mpz_class>& out, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                  bool subtract) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (subtract)
        mpz_submul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      else
        mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

// Product through integer convolution: rational arithmetic would pay a gcd
// per coefficient operation.
std::vector<Scalar> multiply_integer(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  IntegerForm fa = integer_form(a), fb = integer_form(b);
  const std::size_t len = a.size() + b.size() - 1;
  std::vector<mpz_class> re(len), im;
  convolve_add(re, fa.re, fb.re, false);
  if (!fa.real && !fb.real) convolve_add(re, fa.im, fb.im, true);
  if (!fa.real || !fb.real) {
    im.resize(len);
    if (!fb.real) convolve_add(im, fa.re, fb.im, false);
    if (!fa.real) convolve_add(im, fa.im, fb.re, false);
  }
  const mpz_class den = fa.den * fb.den;
  std::vector<Scalar> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    out.emplace_back(mpq_class(re[k], den), im.empty() ? mpq_class(0) : mpq_class(im[k], den));
  }
  return out;
}

}  // namespace

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs_.size() >= 4 && b.coeffs_.size() >= 4) return UniPoly(multiply_integer(a.coeffs_, b.coeffs_));
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar UniPoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Scalar shown = c;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) shown = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (k == 1) mono = var;
    else if (k > 1) mono = var + "^" + std::to_string(k);
    if (mono.empty()) out += shown.to_string();
    else if (shown.is_one()) out += mono;
    else out += shown.to_string() + "*" + mono;
  }
  return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Scalar inv_lead = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Scalar& top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top.is_zero()) continue;
    Scalar q = top * inv_lead;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {UniPoly(), UniPoly(), UniPoly()};
  UniPoly r0 = a, r1 = b;
  UniPoly s0(1), s1;
  UniPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Scalar inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

XgcdList xgcd_list(std::span<const UniPoly> ps) {
  XgcdList out;
  out.cofactors.assign(ps.size(), UniPoly());
  int anchor = -1;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (ps[k].is_zero()) continue;
    if (anchor < 0) {
      Scalar inv = ps[k].lead().inverse();
      out.g = ps[k] * inv;
      out.cofactors[k] = UniPoly(inv);
    } else if (divmod(ps[k], out.g).remainder.is_zero()) {
      // already divisible by the running gcd: nothing changes
      out.cofactors[k] = UniPoly();
    } else {
      Xgcd step = xgcd(out.g, ps[k]);
      for (std::size_t j = 0; j < k; ++j) {
        if (!out.cofactors[j].is_zero()) out.cofactors[j] = out.cofactors[j] * step.u;
      }
      out.cofactors[k] = step.v;
      out.g = step.g;
    }
    anchor = static_cast<int>(k);
  }
  if (anchor < 0) throw Error(ErrorKind::all_zero_input, "every input polynomial is zero");

  const UniPoly& anchor_poly = ps[static_cast<std::size_t>(anchor)];
  for (std::size_t k = 0; k < static_cast<std::size_t>(anchor); ++k) {
    if (ps[k].is_zero() || out.cofactors[k].is_zero()) continue;
    UniPoly h = gcd(ps[k], anchor_poly);
    UniPoly modulus = exact_div(anchor_poly, h);
    if (modulus.degree() <= 0 || out.cofactors[k].degree() < modulus.degree()) continue;
    auto [q, r] = divmod(out.cofactors[k], modulus);
    out.cofactors[k] = std::move(r);
    out.cofactors[static_cast<std::size_t>(anchor)] += q * exact_div(ps[k], h);
  }
  return out;
}

}  // namespace slnrect
