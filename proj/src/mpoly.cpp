#include "slnrect/mpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slnrect {

bool lex_greater(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

namespace {

struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return lex_greater(a, b); }
};

using TermMap = std::map<Exponents, Scalar, LexGreater>;

std::vector<Term> to_terms(TermMap&& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [e, c] : m) {
    if (!c.is_zero()) out.push_back({e, c});
  }
  return out;
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Exponents(nvars, 0), c});
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw std::out_of_range("variable index out of range");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[k] = 1;
  p.terms_.push_back({std::move(e), Scalar(1)});
  return p;
}

MPoly MPoly::from_uni(const UniPoly& p, std::size_t nvars, std::size_t var) {
  MPoly out(nvars);
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar& c = p.coeff(k);
    if (c.is_zero()) continue;
    Exponents e(nvars, 0);
    e[var] = static_cast<std::uint32_t>(k);
    out.terms_.push_back({std::move(e), c});
  }
  return out;
}

MPoly MPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  TermMap m;
  for (auto& t : terms) {
    if (t.exps.size() != nvars) throw std::invalid_argument("term arity mismatch");
    auto [it, inserted] = m.try_emplace(std::move(t.exps), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  MPoly p(nvars);
  p.terms_ = to_terms(std::move(m));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; });
}

Scalar MPoly::constant_term() const {
  if (terms_.empty()) return {};
  const Term& last = terms_.back();
  bool zero = std::all_of(last.exps.begin(), last.exps.end(), [](auto e) { return e == 0; });
  return zero ? last.coeff : Scalar();
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto e : t.exps) s += static_cast<int>(e);
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(std::size_t k) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[k]));
  return d;
}

std::vector<std::size_t> MPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < nvars_; ++k) {
    if (std::any_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.exps[k] != 0; }))
      out.push_back(k);
  }
  return out;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_greater(b[j].exps, a[i].exps)) {
      out.push_back({b[j].exps, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      Scalar c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_arity(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in different variable contexts");
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_arity(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_arity(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_arity(a, b);
  TermMap m;
  Exponents e(a.nvars_);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = x.exps[k] + y.exps[k];
      auto [it, inserted] = m.try_emplace(e, x.coeff * y.coeff);
      if (!inserted) it->second += x.coeff * y.coeff;
    }
  }
  MPoly p(a.nvars_);
  p.terms_ = to_terms(std::move(m));
  return p;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, Scalar(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exps != b.terms_[k].exps || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

Scalar MPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong arity");
  Scalar acc;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (std::uint32_t e = 0; e < t.exps[k]; ++e) v *= point[k];
    }
    acc += v;
  }
  return acc;
}

namespace {

// Horner evaluation over the lex-sorted term range [begin, end), whose
// exponents agree in every variable before k.
UniPoly horner(const std::vector<Term>& terms, std::size_t begin, std::size_t end, std::size_t k,
               std::span<const UniPoly> values, std::vector<std::vector<UniPoly>>& powers) {
  const std::size_t nvars = values.size();
  while (k < nvars && terms[begin].exps[k] == 0 && terms[end - 1].exps[k] == 0) ++k;
  if (k == nvars) return UniPoly(terms[begin].coeff);

  auto power = [&](std::uint32_t e) -> const UniPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(UniPoly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[k]);
    return cache[e];
  };

  UniPoly acc;
  std::uint32_t prev = 0;
  for (std::size_t g = begin; g < end;) {
    const std::uint32_t e = terms[g].exps[k];
    std::size_t h = g;
    while (h < end && terms[h].exps[k] == e) ++h;
    if (g != begin) acc = acc * power(prev - e);
    acc += horner(terms, g, h, k + 1, values, powers);
    prev = e;
    g = h;
  }
  return prev == 0 ? acc : acc * power(prev);
}

}  // namespace

UniPoly MPoly::eval_uni(std::span<const UniPoly> values) const {
  if (values.size() != nvars_) throw std::invalid_argument("substitution has wrong arity");
  if (terms_.empty()) return {};
  std::vector<std::vector<UniPoly>> powers(nvars_);
  return horner(terms_, 0, terms_.size(), 0, values, powers);
}

MPoly MPoly::specialize(std::size_t var, const Scalar& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    for (std::uint32_t e = 0; e < t.exps[var]; ++e) c *= value;
    Exponents ex = t.exps;
    ex[var] = 0;
    out.push_back({std::move(ex), std::move(c)});
  }
  return from_terms(nvars_, std::move(out));
}

UniPoly MPoly::to_uni(std::size_t var) const {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (k != var && t.exps[k] != 0) throw std::invalid_argument("polynomial is not univariate");
    }
    c[t.exps[var]] += t.coeff;
  }
  return UniPoly(std::move(c));
}

MPoly MPoly::remap(std::size_t new_nvars, std::span<const std::size_t> target) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(new_nvars, 0);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exps[k] == 0) continue;
      if (target[k] >= new_nvars) throw std::out_of_range("remap target out of range");
      e[target[k]] += t.exps[k];
    }
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

std::string MPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff.is_real() && sgn(t.coeff.re()) < 0;
    Scalar shown = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (t.exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (t.exps[k] > 1) mono += "^" + std::to_string(t.exps[k]);
    }
    if (mono.empty()) out += shown.to_string();
    else if (shown.is_one()) out += mono;
    else out += shown.to_string() + "*" + mono;
  }
  return out;
}

MPoly compose(const UniPoly& p, const MPoly& inner) {
  MPoly acc(inner.nvars());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * inner;
    acc += MPoly::constant(inner.nvars(), p.coeff(k));
  }
  return acc;
}

MPoly divided_difference(const UniPoly& p) {
  std::vector<Term> terms;
  for (int k = 1; k <= p.degree(); ++k) {
    const Scalar& c = p.coeff(k);
    if (c.is_zero()) continue;
    for (int i = 0; i < k; ++i) {
      terms.push_back({Exponents{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k - 1 - i)}, c});
    }
  }
  return MPoly::from_terms(2, std::move(terms));
}

}  // namespace slnrect
