#include <algorithm>
#include <cmath>
#include <complex>

#include "slnrect/unipoly.hpp"

namespace slnrect {

namespace {

using Complex = std::complex<long double>;

std::vector<Complex> approximate_roots(const std::vector<Complex>& monic_coeffs) {
  const std::size_t n = monic_coeffs.size() - 1;
  auto eval = [&](const Complex& z, Complex& dz) {
    Complex v = monic_coeffs[n];
    dz = 0;
    for (std::size_t k = n; k-- > 0;) {
      dz = dz * z + v;
      v = v * z + monic_coeffs[k];
    }
    return v;
  };
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(monic_coeffs[k]));
  radius = 1 + radius;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double angle = 2.0L * 3.14159265358979323846L * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(radius * 0.5L, angle);
  }
  // Aberth-Ehrlich iteration.
  for (int iter = 0; iter < 800; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex d;
      Complex v = eval(z[k], d);
      if (v == Complex(0)) continue;
      Complex ratio = v / d;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      }
      Complex step = ratio / (Complex(1) - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

/// Best rational approximation with denominator at most max_den.
mpq_class reconstruct(long double x, long max_den) {
  long double a = std::floor(x);
  long double h0 = 1, h1 = a, k0 = 0, k1 = 1;
  long double frac = x - a;
  for (int step = 0; step < 64 && frac > 1e-15L; ++step) {
    long double inv = 1 / frac;
    long double ai = std::floor(inv);
    long double h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > static_cast<long double>(max_den)) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    frac = inv - ai;
  }
  if (std::fabs(h1) > 9e15L) return mpq_class(0);
  mpq_class q(static_cast<long>(h1), static_cast<long>(k1));
  q.canonicalize();
  return q;
}

}  // namespace

std::vector<Scalar> gaussian_rational_roots(const UniPoly& p) {
  std::vector<Scalar> found;
  if (p.degree() <= 0) return found;
  UniPoly work = p.monic();
  // Square-free part keeps the numeric iteration well conditioned.
  UniPoly g = gcd(work, work.derivative());
  if (g.degree() > 0) work = exact_div(work, g).monic();

  while (work.degree() > 0) {
    if (work.degree() == 1) {
      found.push_back(-work.coeff(0));
      break;
    }
    std::vector<Complex> c;
    for (const auto& s : work.coeffs()) c.emplace_back(s.re().get_d(), s.im().get_d());
    bool progressed = false;
    for (const auto& z : approximate_roots(c)) {
      for (long max_den : {1000L, 1000000L}) {
        Scalar candidate(reconstruct(z.real(), max_den), reconstruct(z.imag(), max_den));
        if (work(candidate).is_zero()) {
          found.push_back(candidate);
          work = exact_div(work, UniPoly::variable() - UniPoly(candidate));
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
    if (!progressed) break;
  }
  std::sort(found.begin(), found.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace slnrect
