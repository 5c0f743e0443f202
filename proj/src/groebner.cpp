#include "slnrect/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "slnrect/errors.hpp"
#include "slnrect/matrix.hpp"

namespace slnrect {

namespace {

// Exponent vectors inside the engine are permuted so that position 0 holds
// the largest variable of the order.
struct OrderCmp {
  OrderKind kind;

  static std::uint32_t degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

  bool greater(const Exponents& a, const Exponents& b) const {
    if (kind == OrderKind::grevlex) {
      auto da = degree(a), db = degree(b);
      if (da != db) return da > db;
      for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k];
      }
      return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] > b[k];
    }
    return false;
  }
  bool operator()(const Exponents& a, const Exponents& b) const { return greater(a, b); }
};

struct GPoly {
  std::vector<Term> terms;  // descending, monic unless zero
  std::uint32_t degree = 0;  // total degree, used to order the inputs
  const Exponents& lead() const { return terms.front().exps; }
};

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) e[k] = std::max(a[k], b[k]);
  return e;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

bool is_one(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

class Engine {
public:
  Engine(const MonomialOrder& order, std::size_t nvars, const GroebnerBudget& budget)
      : cmp_{order.kind}, nvars_(nvars), budget_(budget) {
    ranking_ = order.ranking;
    if (ranking_.empty()) {
      ranking_.resize(nvars);
      std::iota(ranking_.begin(), ranking_.end(), 0);
    }
    if (ranking_.size() != nvars) throw std::invalid_argument("monomial order ranking has wrong size");
  }

  GPoly import(const MPoly& p) const {
    GPoly g;
    for (const auto& t : p.terms()) {
      Exponents e(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = t.exps[ranking_[k]];
      g.degree = std::max(g.degree, OrderCmp::degree(e));
      g.terms.push_back({std::move(e), t.coeff});
    }
    std::sort(g.terms.begin(), g.terms.end(), [this](const Term& a, const Term& b) { return cmp_(a.exps, b.exps); });
    return g;
  }

  MPoly export_poly(const GPoly& g) const {
    std::vector<Term> out;
    for (const auto& t : g.terms) {
      Exponents e(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) e[ranking_[k]] = t.exps[k];
      out.push_back({std::move(e), t.coeff});
    }
    return MPoly::from_terms(nvars_, std::move(out));
  }

  static void make_monic(GPoly& g) {
    if (g.terms.empty() || g.terms.front().coeff.is_one()) return;
    Scalar inv = g.terms.front().coeff.inverse();
    for (auto& t : g.terms) t.coeff *= inv;
  }

  void count_step() {
    if (++steps_ > budget_.max_steps)
      throw Error(ErrorKind::resource_exceeded, "Groebner reduction step budget exhausted",
                  std::to_string(budget_.max_steps));
  }

  /// Full reduction of f by the polynomials of `basis` flagged active.
  GPoly reduce(const GPoly& f, const std::vector<GPoly>& basis, const std::vector<bool>& active) {
    std::map<Exponents, Scalar, OrderCmp> work(cmp_);
    for (const auto& t : f.terms) work.emplace(t.exps, t.coeff);
    GPoly out;
    Exponents shift(nvars_);
    while (!work.empty()) {
      auto it = work.begin();
      const GPoly* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (active[k] && divides(basis[k].lead(), it->first)) {
          divisor = &basis[k];
          break;
        }
      }
      if (divisor == nullptr) {
        out.terms.push_back({it->first, it->second});
        work.erase(it);
        continue;
      }
      count_step();
      Scalar factor = it->second;
      for (std::size_t k = 0; k < nvars_; ++k) shift[k] = it->first[k] - divisor->lead()[k];
      work.erase(it);
      for (std::size_t j = 1; j < divisor->terms.size(); ++j) {
        Exponents e = divisor->terms[j].exps;
        for (std::size_t k = 0; k < nvars_; ++k) e[k] += shift[k];
        Scalar delta = factor * divisor->terms[j].coeff;
        auto [pos, inserted] = work.try_emplace(std::move(e), -delta);
        if (!inserted) {
          pos->second -= delta;
          if (pos->second.is_zero()) work.erase(pos);
        }
      }
    }
    return out;
  }

  GPoly spoly(const GPoly& f, const GPoly& g) const {
    Exponents l = lcm(f.lead(), g.lead());
    std::map<Exponents, Scalar, OrderCmp> work(cmp_);
    auto add = [&](const GPoly& p, const Scalar& sign) {
      Exponents shift(nvars_);
      for (std::size_t k = 0; k < nvars_; ++k) shift[k] = l[k] - p.lead()[k];
      for (const auto& t : p.terms) {
        Exponents e = t.exps;
        for (std::size_t k = 0; k < nvars_; ++k) e[k] += shift[k];
        auto [pos, inserted] = work.try_emplace(std::move(e), t.coeff * sign);
        if (!inserted) {
          pos->second += t.coeff * sign;
          if (pos->second.is_zero()) work.erase(pos);
        }
      }
    };
    GPoly s;
    add(f, Scalar(1));
    add(g, Scalar(-1));
    for (auto& [e, c] : work) s.terms.push_back({e, c});
    return s;
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    Exponents lcm;
  };

  Pair make_pair(std::size_t i, std::size_t j) const {
    return {i, j, lcm(basis_[i].lead(), basis_[j].lead())};
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(GPoly h) {
    if (basis_.size() >= budget_.max_basis)
      throw Error(ErrorKind::resource_exceeded, "Groebner basis size budget exhausted",
                  std::to_string(budget_.max_basis));
    basis_.push_back(std::move(h));
    active_.push_back(true);
    std::size_t hi = basis_.size() - 1;
    const Exponents& lh = basis_[hi].lead();

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) fresh.push_back(make_pair(g, hi));
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool cop = coprime(basis_[fresh[a].i].lead(), lh);
      bool dominated = false;
      if (!cop) {
        for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
          if (b == a || !divides(fresh[b].lcm, fresh[a].lcm)) continue;
          if (fresh[b].lcm == fresh[a].lcm) {
            // Equal lcms: keep the first, or a coprime one.
            if (b < a || coprime(basis_[fresh[b].i].lead(), lh)) dominated = true;
          } else {
            dominated = true;
          }
        }
      }
      if (!dominated) kept.push_back(fresh[a]);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return coprime(basis_[p.i].lead(), lh); });
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!divides(lh, p.lcm)) return false;
      return lcm(basis_[p.i].lead(), lh) != p.lcm && lcm(basis_[p.j].lead(), lh) != p.lcm;
    });
    for (auto& p : kept) pairs_.push_back(std::move(p));
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && divides(lh, basis_[g].lead())) active_[g] = false;
    }
  }

  std::vector<GPoly> run(std::span<const MPoly> gens) {
    std::vector<GPoly> inputs;
    for (const auto& f : gens) {
      if (f.nvars() != nvars_) throw std::invalid_argument("generators live in different contexts");
      if (!f.is_zero()) inputs.push_back(import(f));
    }
    std::sort(inputs.begin(), inputs.end(), [this](const GPoly& a, const GPoly& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return cmp_(b.lead(), a.lead());
    });
    for (const auto& f : inputs) {
      GPoly h = reduce(f, basis_, active_);
      if (h.terms.empty()) continue;
      make_monic(h);
      if (is_one(h.lead())) return {h};
      update(std::move(h));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        // Normal strategy: the sugar strategy ran into heavy coefficient
        // growth on the inhomogeneous ideals met here, under both orders.
        if (a.lcm != b.lcm) return cmp_(b.lcm, a.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      GPoly s = spoly(basis_[p.i], basis_[p.j]);
      if (s.terms.empty()) continue;
      GPoly h = reduce(s, basis_, active_);
      if (h.terms.empty()) continue;
      make_monic(h);
      if (is_one(h.lead())) return {h};
      update(std::move(h));
    }
    // The active set is minimal; inter-reduce the tails.
    std::vector<GPoly> result;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      std::vector<bool> others = active_;
      others[k] = false;
      GPoly tail;
      tail.terms.assign(basis_[k].terms.begin() + 1, basis_[k].terms.end());
      GPoly reduced = reduce(tail, basis_, others);
      GPoly g;
      g.terms.push_back(basis_[k].terms.front());
      for (auto& t : reduced.terms) g.terms.push_back(std::move(t));
      result.push_back(std::move(g));
    }
    std::sort(result.begin(), result.end(), [this](const GPoly& a, const GPoly& b) { return cmp_(a.lead(), b.lead()); });
    return result;
  }

  OrderCmp cmp_;

private:
  std::size_t nvars_;
  GroebnerBudget budget_;
  std::vector<std::size_t> ranking_;
  std::uint64_t steps_ = 0;
  std::vector<GPoly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::size_t context_size(std::span<const MPoly> gens) {
  return gens.empty() ? 0 : gens.front().nvars();
}

}  // namespace

Exponents leading_exponents(const MPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  Engine engine(order, p.nvars(), {});
  GPoly g = engine.import(p);
  Exponents perm = g.lead();
  MPoly single = engine.export_poly(GPoly{{Term{perm, Scalar(1)}}, 0});
  return single.terms().front().exps;
}

std::vector<MPoly> groebner(std::span<const MPoly> gens, const MonomialOrder& order, const GroebnerBudget& budget) {
  std::size_t nvars = context_size(gens);
  Engine engine(order, nvars, budget);
  std::vector<MPoly> out;
  for (const auto& g : engine.run(gens)) out.push_back(engine.export_poly(g));
  return out;
}

MPoly normal_form(const MPoly& f, std::span<const MPoly> basis, const MonomialOrder& order,
                  const GroebnerBudget& budget) {
  Engine engine(order, f.nvars(), budget);
  std::vector<GPoly> imported;
  for (const auto& b : basis) {
    GPoly g = engine.import(b);
    Engine::make_monic(g);
    imported.push_back(std::move(g));
  }
  std::vector<bool> active(imported.size(), true);
  std::erase_if(imported, [](const GPoly& g) { return g.terms.empty(); });
  active.resize(imported.size());
  return engine.export_poly(engine.reduce(engine.import(f), imported, active));
}

bool is_unit_ideal(std::span<const MPoly> gens, const GroebnerBudget& budget) {
  for (const auto& g : gens) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  auto basis = groebner(gens, MonomialOrder{OrderKind::grevlex, {}}, budget);
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

MPoly implicitize_section(std::size_t nvars, std::size_t t_var, std::span<const Assignment> assignments,
                          const GroebnerBudget& budget) {
  if (t_var >= nvars) throw std::out_of_range("parameter variable out of range");
  // Cheap exit: an assignment of degree one is already a section.
  for (const auto& a : assignments) {
    if (a.value.degree() == 1) {
      Scalar inv = a.value.coeff(1).inverse();
      return (MPoly::variable(nvars, a.var) - MPoly::constant(nvars, a.value.coeff(0))) * inv;
    }
  }
  std::vector<MPoly> graph;
  for (const auto& a : assignments) {
    if (a.var == t_var) throw std::invalid_argument("the parameter cannot be assigned");
    graph.push_back(MPoly::variable(nvars, a.var) - MPoly::from_uni(a.value, nvars, t_var));
  }
  // t largest, then assigned variables by descending degree of their value,
  // then everything else.
  std::vector<std::size_t> idx(assignments.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return assignments[a].value.degree() > assignments[b].value.degree();
  });
  MonomialOrder order{OrderKind::lex, {t_var}};
  std::vector<bool> placed(nvars, false);
  placed[t_var] = true;
  for (auto k : idx) {
    if (!placed[assignments[k].var]) {
      order.ranking.push_back(assignments[k].var);
      placed[assignments[k].var] = true;
    }
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!placed[v]) order.ranking.push_back(v);
  }
  if (graph.empty()) throw Error(ErrorKind::not_a_section, "no assignments to build a section from");
  auto basis = groebner(graph, order, budget);
  MPoly t = MPoly::variable(nvars, t_var);
  for (const auto& g : basis) {
    Exponents lead = leading_exponents(g, order);
    Exponents want(nvars, 0);
    want[t_var] = 1;
    if (lead == want) return t - g;
  }
  throw Error(ErrorKind::not_a_section, "the parameter is not a polynomial in the assigned values");
}

std::optional<MPoly> section_by_ansatz(std::size_t nvars, std::span<const Assignment> assignments,
                                       unsigned max_degree) {
  constexpr std::size_t kMaxUnknowns = 400;
  const std::size_t m = assignments.size();
  if (m == 0) return std::nullopt;

  // Monomials in the assigned variables by total degree, each with its value in t.
  std::vector<Exponents> monos{Exponents(m, 0)};
  std::vector<UniPoly> values{UniPoly(1)};
  std::size_t layer_begin = 0;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const std::size_t layer_end = monos.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      // Extend only at or after the last variable used, so each monomial appears once.
      std::size_t last = 0;
      for (std::size_t v = 0; v < m; ++v)
        if (monos[k][v] > 0) last = v;
      for (std::size_t v = last; v < m; ++v) {
        Exponents e = monos[k];
        ++e[v];
        monos.push_back(std::move(e));
        values.push_back(values[k] * assignments[v].value);
      }
    }
    layer_begin = layer_end;
    if (monos.size() > kMaxUnknowns) break;

    int top = 1;
    for (const auto& v : values) top = std::max(top, v.degree());
    ScalarMatrix a(static_cast<std::size_t>(top) + 1, monos.size());
    for (std::size_t c = 0; c < values.size(); ++c)
      for (int k = 0; k <= values[c].degree(); ++k) a(static_cast<std::size_t>(k), c) = values[c].coeff(k);
    std::vector<Scalar> b(a.rows());
    b[1] = Scalar(1);
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x) continue;

    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if ((*x)[c].is_zero()) continue;
      Exponents e(nvars, 0);
      for (std::size_t v = 0; v < m; ++v) e[assignments[v].var] += monos[c][v];
      terms.push_back(Term{std::move(e), (*x)[c]});
    }
    return MPoly::from_terms(nvars, std::move(terms));
  }
  return std::nullopt;
}

}  // namespace slnrect
