#include "slnrect/autoword.hpp"

#include <algorithm>

#include "slnrect/errors.hpp"
#include "slnrect/random.hpp"

namespace slnrect {

VarNames EntryContext::names() const {
  VarNames out;
  out.reserve(nvars());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  out.emplace_back("t");
  out.emplace_back("s");
  return out;
}

namespace {

void check_payload(const MPoly& p, std::size_t n, bool row, std::size_t forbidden) {
  EntryContext ctx{n};
  if (p.nvars() != ctx.nvars()) throw Error(ErrorKind::size_mismatch, "payload has the wrong variable context");
  for (std::size_t v : p.support()) {
    if (v >= n * n) throw Error(ErrorKind::invalid_support, "payload mentions " + ctx.names()[v], ctx.names()[v]);
    std::size_t line = row ? v / n : v % n;
    if (line == forbidden) throw Error(ErrorKind::invalid_support, "payload mentions " + ctx.names()[v], ctx.names()[v]);
  }
}

void check_indices(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= n || j >= n) throw Error(ErrorKind::size_mismatch, "generator index out of range");
  if (i == j) throw Error(ErrorKind::invalid_support, "diagonal elementary generator");
}

void check_square(const auto& m, std::size_t n) {
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::size_mismatch, "generator matrix has the wrong size");
}

void check_det_one(const ScalarMatrix& b) {
  Scalar d = determinant(b);
  if (!d.is_one()) throw Error(ErrorKind::not_unimodular, "determinant is " + d.to_string(), d.to_string());
}

// Payload evaluation over Scalar points or curves.
Scalar eval_payload(const MPoly& p, const std::vector<Scalar>& values) { return p.eval(values); }
UniPoly eval_payload(const MPoly& p, const std::vector<UniPoly>& values) { return p.eval_uni(values); }

Scalar substitute(const UniPoly& p, const Scalar& v) { return p(v); }
UniPoly substitute(const UniPoly& p, const UniPoly& v) { return p.compose(v); }

template <class T>
std::vector<T> entry_values(const Matrix<T>& x) {
  const std::size_t n = x.rows();
  std::vector<T> v;
  v.reserve(n * n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.push_back(x(i, j));
  v.emplace_back();
  v.emplace_back();
  return v;
}

template <class T>
Matrix<T> lift(const ScalarMatrix& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j));
  return out;
}

template <class T>
struct Act {
  Matrix<T>& x;

  void operator()(const LeftElem& g) const {
    T p = eval_payload(g.p, entry_values(x));
    if (p.is_zero()) return;
    for (std::size_t k = 0; k < x.cols(); ++k) x(g.i, k) += p * x(g.j, k);
  }
  void operator()(const RightElem& g) const {
    T q = eval_payload(g.q, entry_values(x));
    if (q.is_zero()) return;
    for (std::size_t k = 0; k < x.rows(); ++k) x(k, g.j) += x(k, g.i) * q;
  }
  void operator()(const ConstLeft& g) const { x = lift<T>(g.b) * x; }
  void operator()(const ConstRight& g) const { x = x * lift<T>(g.b); }
  void operator()(const GlPair& g) const {
    x = lift<T>(g.a) * x;
    Scalar scale = determinant(g.a).inverse();
    const std::size_t last = x.cols() - 1;
    for (std::size_t k = 0; k < x.rows(); ++k) x(k, last) = x(k, last) * scale;
  }
  void operator()(const CurveRightMul& g) const {
    const T corner = x(x.rows() - 1, 0);
    Matrix<T> m(g.m.rows(), g.m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = substitute(g.m(i, j), corner);
    x = x * m;
  }
};

}  // namespace

const Generator& check_generator(const Generator& g, std::size_t n) {
  std::visit(
      [n](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, LeftElem>) {
          check_indices(v.i, v.j, n);
          check_payload(v.p, n, true, v.i);
        } else if constexpr (std::is_same_v<V, RightElem>) {
          check_indices(v.i, v.j, n);
          check_payload(v.q, n, false, v.j);
        } else if constexpr (std::is_same_v<V, ConstLeft> || std::is_same_v<V, ConstRight>) {
          check_square(v.b, n);
          check_det_one(v.b);
        } else if constexpr (std::is_same_v<V, GlPair>) {
          check_square(v.a, n);
          if (determinant(v.a).is_zero()) throw Error(ErrorKind::not_unimodular, "singular matrix", "0");
        } else {
          check_square(v.m, n);
          UniPoly d = determinant(v.m);
          if (d != UniPoly(1)) throw Error(ErrorKind::not_unimodular, "determinant is " + d.to_string("s"), d.to_string("s"));
          for (std::size_t i = 0; i < n; ++i) {
            if (v.m(i, 0) != UniPoly(i == 0 ? 1 : 0))
              throw Error(ErrorKind::first_column_not_preserved, "row " + std::to_string(i + 1));
          }
        }
      },
      g);
  return g;
}

AutWord::AutWord(std::size_t n, std::vector<Generator> gens) : n_(n) {
  gens_.reserve(gens.size());
  for (auto& g : gens) push_back(std::move(g));
}

void AutWord::push_back(Generator g) {
  check_generator(g, n_);
  gens_.push_back(std::move(g));
}

void AutWord::append(const AutWord& other) {
  if (other.n_ != n_) throw Error(ErrorKind::size_mismatch, "words act on different SL_n");
  gens_.insert(gens_.end(), other.gens_.begin(), other.gens_.end());
}

SlCurve apply_word(const AutWord& w, const SlCurve& c) {
  if (w.n() != c.n()) throw Error(ErrorKind::size_mismatch, "word and curve sizes differ");
  PolyMatrix x = c.entries();
  for (const auto& g : w.generators()) std::visit(Act<UniPoly>{x}, g);
  return SlCurve::validate(std::move(x));
}

ScalarMatrix apply_word_matrix(const AutWord& w, const ScalarMatrix& x0) {
  if (!x0.square() || x0.rows() != w.n()) throw Error(ErrorKind::size_mismatch, "word and matrix sizes differ");
  check_det_one(x0);
  ScalarMatrix x = x0;
  for (const auto& g : w.generators()) std::visit(Act<Scalar>{x}, g);
  return x;
}

AutWord invert_word(const AutWord& w) {
  AutWord out(w.n());
  const auto& gens = w.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    out.push_back(std::visit(
        [](const auto& v) -> Generator {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, LeftElem>) {
            return LeftElem{v.i, v.j, -v.p};
          } else if constexpr (std::is_same_v<V, RightElem>) {
            return RightElem{v.i, v.j, -v.q};
          } else if constexpr (std::is_same_v<V, ConstLeft>) {
            return ConstLeft{inverse(v.b)};
          } else if constexpr (std::is_same_v<V, ConstRight>) {
            return ConstRight{inverse(v.b)};
          } else if constexpr (std::is_same_v<V, GlPair>) {
            return GlPair{inverse(v.a)};
          } else {
            return CurveRightMul{adjugate(v.m)};
          }
        },
        *it));
  }
  return out;
}

namespace {

ScalarMatrix random_elementary_product(Rng& rng, std::size_t n, int factors) {
  ScalarMatrix b = ScalarMatrix::identity(n);
  for (int f = 0; f < factors; ++f) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = rng.nonzero(3);
    for (std::size_t k = 0; k < n; ++k) b(i, k) += Scalar(c) * b(j, k);
  }
  return b;
}

ScalarMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
  for (;;) {
    ScalarMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(rng.uniform(-bound, bound));
    if (!determinant(a).is_zero()) return a;
  }
}

// Sum of one to three monomials in the allowed variables plus an optional constant.
MPoly random_payload(Rng& rng, std::size_t n, const std::vector<std::size_t>& allowed, unsigned max_deg) {
  EntryContext ctx{n};
  MPoly p(ctx.nvars());
  const long terms = rng.uniform(1, 3);
  for (long k = 0; k < terms; ++k) {
    const long deg = max_deg == 0 ? 0 : rng.uniform(1, max_deg);
    Exponents e(ctx.nvars(), 0);
    for (long d = 0; d < deg; ++d) ++e[allowed[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(allowed.size()) - 1))]];
    p += MPoly::from_terms(ctx.nvars(), {Term{e, Scalar(rng.nonzero(3))}});
  }
  if (rng.uniform(0, 1) == 1) p += MPoly::constant(ctx.nvars(), Scalar(rng.nonzero(3)));
  return p;
}

}  // namespace

ScalarMatrix random_unimodular(std::uint64_t seed, std::size_t n, long bound) {
  Rng rng(seed);
  ScalarMatrix a = random_invertible(rng, n, bound);
  Scalar d = determinant(a).inverse();
  for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = a(i, n - 1) * d;
  return a;
}

AutWord random_word(std::uint64_t seed, std::size_t n, std::size_t max_len, unsigned max_deg) {
  AutWord w(n);
  if (max_len == 0) return w;
  Rng rng(seed);
  const auto len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_len)));
  const long last = static_cast<long>(n) - 1;
  for (std::size_t k = 0; k < len; ++k) {
    switch (rng.uniform(0, 4)) {
      case 0:
      case 1: {
        const bool left = rng.uniform(0, 1) == 0;
        auto i = static_cast<std::size_t>(rng.uniform(0, last));
        auto j = static_cast<std::size_t>(rng.uniform(0, last - 1));
        if (j >= i) ++j;
        std::vector<std::size_t> allowed;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (left ? a != i : b != j) allowed.push_back(a * n + b);
        MPoly p = random_payload(rng, n, allowed, max_deg);
        if (left)
          w.push_back(LeftElem{i, j, std::move(p)});
        else
          w.push_back(RightElem{i, j, std::move(p)});
        break;
      }
      case 2:
        w.push_back(ConstLeft{random_elementary_product(rng, n, 2)});
        break;
      case 3:
        w.push_back(ConstRight{random_elementary_product(rng, n, 2)});
        break;
      default:
        w.push_back(GlPair{random_invertible(rng, n, 2)});
        break;
    }
  }
  return w;
}

}  // namespace slnrect
