#include "slnrect/rectifier.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "slnrect/errors.hpp"
#include "slnrect/random.hpp"

namespace slnrect {

namespace {

enum StageSeed : std::uint64_t { kNormalize = 1, kProjection = 2, kSeparate = 3 };

constexpr unsigned kAnsatzDegree = 3;
constexpr std::size_t kNormalizeWindow = 24;

std::vector<MPoly> divided_differences(std::span<const UniPoly> coords) {
  std::vector<MPoly> out;
  for (const auto& p : coords) {
    MPoly q = divided_difference(p);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return out;
}

// Unit-ideal test on the divided differences of `coords` (which are not all constant).
bool coords_embed(std::span<const UniPoly> coords, const GroebnerBudget& budget) {
  auto dd = divided_differences(coords);
  if (dd.empty()) return false;
  return is_unit_ideal(dd, budget);
}

std::vector<UniPoly> row_values(const SlCurve& c) {
  auto v = c.flattened();
  v.emplace_back();
  v.emplace_back();
  return v;
}

[[noreturn]] void exhausted(const std::string& what, std::size_t trials) {
  throw Error(ErrorKind::search_exhausted, what + " not found in " + std::to_string(trials) + " trials",
              std::to_string(trials));
}

ScalarMatrix cyclic_shift(std::size_t n) {
  // New column 1 is (+-) old column n; new column j is old column j - 1.
  ScalarMatrix q(n, n);
  q(n - 1, 0) = Scalar(n % 2 == 1 ? 1 : -1);
  for (std::size_t j = 1; j < n; ++j) q(j - 1, j) = Scalar(1);
  return q;
}

// Unimodular matrix whose last row is v (v != 0).
ScalarMatrix completion_with_last_row(const std::vector<Scalar>& v) {
  const std::size_t n = v.size();
  std::size_t m = 0;
  while (v[m].is_zero()) ++m;
  ScalarMatrix b(n, n);
  std::size_t r = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (k != m) b(r++, k) = Scalar(1);
  for (std::size_t k = 0; k < n; ++k) b(n - 1, k) = v[k];
  Scalar d = determinant(b).inverse();
  for (std::size_t k = 0; k < n; ++k) b(0, k) = b(0, k) * d;
  return b;
}

// C = diag(G, 1) in SL_n with G * a = e1, where a (length n - 1) is nonzero.
ScalarMatrix clearing_matrix(const std::vector<Scalar>& a) {
  const std::size_t k = a.size();
  const std::size_t n = k + 1;
  std::size_t m = 0;
  while (a[m].is_zero()) ++m;
  ScalarMatrix u(k, k);
  for (std::size_t i = 0; i < k; ++i) u(i, 0) = a[i];
  std::size_t col = 1;
  for (std::size_t i = 0; i < k; ++i)
    if (i != m) u(i, col++) = Scalar(1);
  Scalar d = determinant(u).inverse();
  for (std::size_t i = 0; i < k; ++i) u(i, 1) = u(i, 1) * d;
  ScalarMatrix g = inverse(u);
  ScalarMatrix c = ScalarMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c(i, j) = g(i, j);
  return c;
}

// When t is an affine combination of one block column, a row operation that
// keeps the last row turns that combination into a single entry, so the
// section becomes one variable and the lifted payloads stay small. Returns
// the row operation, or nothing.
std::optional<ScalarMatrix> linear_section_row_move(const SlCurve& base) {
  const std::size_t n = base.n();
  EntryContext ctx{n};
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Assignment> col;
    for (std::size_t i = 0; i < n; ++i) col.push_back({ctx.x(i, j), base(i, j)});
    auto tau = section_by_ansatz(ctx.nvars(), col, 1);
    if (!tau) continue;
    std::vector<Scalar> w(n);
    for (const auto& term : tau->terms())
      for (std::size_t i = 0; i < n; ++i)
        if (term.exps[ctx.x(i, j)] == 1) w[i] = term.coeff;
    std::size_t pivot = 0;
    while (pivot + 1 < n && w[pivot].is_zero()) ++pivot;
    if (pivot + 1 == n) return std::nullopt;  // already a single entry of the last row
    ScalarMatrix m = ScalarMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) m(pivot, i) = w[i] / w[pivot];
    return m;
  }
  return std::nullopt;
}

// Upper bound on the terms of tilde o tau: monomials of degree at most
// deg(tilde) * deg(tau) in the variables of tau.
void check_lift_size(const UniPoly& tilde, const MPoly& tau) {
  constexpr double kMaxLiftTerms = 250'000;
  const double m = static_cast<double>(tau.support().size());
  const double d = static_cast<double>(std::max(tilde.degree(), 0)) * tau.total_degree();
  double bound = 1;
  for (double k = 1; k <= m && bound <= kMaxLiftTerms; ++k) bound *= (d + k) / k;
  if (bound > kMaxLiftTerms)
    throw Error(ErrorKind::resource_exceeded,
                "lifted Bezout payload would exceed " + std::to_string(static_cast<long>(kMaxLiftTerms)) + " terms",
                std::to_string(static_cast<long>(kMaxLiftTerms)));
}

bool support_in_block(const MPoly& p, std::size_t n) {
  for (std::size_t v : p.support())
    if (v >= n * n || v % n == 0) return false;
  return true;
}

}  // namespace

bool has_standard_first_column(const SlCurve& c) {
  const std::size_t n = c.n();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (c(i, 0) != UniPoly(i == 0 ? 1 : 0)) return false;
  return c(n - 1, 0) == UniPoly::variable();
}

bool columns_embed(const SlCurve& c, std::size_t cols, const GroebnerBudget& budget) {
  std::vector<UniPoly> coords;
  for (std::size_t j = 0; j < cols; ++j)
    for (auto& p : c.column(j)) coords.push_back(std::move(p));
  return coords_embed(coords, budget);
}

// A degree-1 entry or a low-degree ansatz is tried first; elimination then runs on the smallest prefix (by degree) of
// the block that already embeds, since its cost grows fast with the number
// of variables.
MPoly block_section(const SlCurve& c, const GroebnerBudget& budget) {
  const std::size_t n = c.n();
  EntryContext ctx{n};
  struct Candidate {
    int degree;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      if (!c(i, j).is_constant()) cands.push_back({c(i, j).degree(), i, j});
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });

  // Drop entries that are affine in an earlier one; they add nothing.
  std::vector<Candidate> distinct;
  for (const auto& cand : cands) {
    const UniPoly p = c(cand.i, cand.j) - UniPoly(c(cand.i, cand.j).coeff(0));
    bool redundant = false;
    for (const auto& d : distinct) {
      const UniPoly q = c(d.i, d.j) - UniPoly(c(d.i, d.j).coeff(0));
      if (q.degree() == p.degree() && p * q.lead() == q * p.lead()) redundant = true;
    }
    if (!redundant) distinct.push_back(cand);
  }

  if (!distinct.empty() && distinct.front().degree == 1) {
    const Assignment single{ctx.x(distinct.front().i, distinct.front().j), c(distinct.front().i, distinct.front().j)};
    return implicitize_section(ctx.nvars(), ctx.t(), std::span(&single, 1), budget);
  }

  std::vector<Assignment> all;
  for (const auto& d : distinct) all.push_back({ctx.x(d.i, d.j), c(d.i, d.j)});
  if (auto tau = section_by_ansatz(ctx.nvars(), all, kAnsatzDegree)) return *tau;

  for (std::size_t m = 1; m <= distinct.size(); ++m) {
    std::vector<UniPoly> coords;
    std::vector<Assignment> assignments;
    for (std::size_t k = 0; k < m; ++k) {
      coords.push_back(c(distinct[k].i, distinct[k].j));
      assignments.push_back({ctx.x(distinct[k].i, distinct[k].j), coords.back()});
    }
    if (m < distinct.size() && !coords_embed(coords, budget)) continue;
    return implicitize_section(ctx.nvars(), ctx.t(), assignments, budget);
  }
  throw Error(ErrorKind::not_a_section, "the column block is constant");
}

std::vector<UniPoly> bezout_tildes(std::span<const UniPoly> last_row) {
  XgcdList bz = xgcd_list(last_row.subspan(1));
  if (bz.g != UniPoly(1)) throw Error(ErrorKind::precondition_failed, "separating row is not coprime");
  const UniPoly target = UniPoly::variable() - last_row[0];
  std::vector<UniPoly> tildes;
  for (const auto& cf : bz.cofactors) tildes.push_back(cf * target);
  return tildes;
}

AutWord Certificate::word() const {
  AutWord w(input.n());
  for (const auto& s : stages) w.append(s.word);
  return w;
}

namespace {

std::size_t rank_score(const SlCurve& c) {
  return rank(c.at(Scalar(0)) - c.at(Scalar(1))) + rank(evaluate(c.derivative(), Scalar(0)));
}

// Repeatedly applies the single elementary move with a one-variable payload
// that raises the combined rank most, preferring low degree. Deterministic;
// each round counts as one trial.
std::optional<StageResult> greedy_normalize(const SlCurve& c, std::size_t max_rounds) {
  const std::size_t n = c.n();
  const EntryContext ctx{n};
  AutWord word(n);
  SlCurve cur = c;
  std::size_t score = rank_score(cur);
  for (std::size_t round = 0; round < max_rounds && score < 2 * n; ++round) {
    std::optional<std::pair<Generator, SlCurve>> best;
    std::size_t best_score = score;
    int best_degree = 0;
    auto consider = [&](Generator g) {
      SlCurve d = apply_word(AutWord(n, {g}), cur);
      const std::size_t sc = rank_score(d);
      if (sc < best_score || (sc == best_score && (!best || d.degree() >= best_degree))) return;
      best_score = sc;
      best_degree = d.degree();
      best.emplace(std::move(g), std::move(d));
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            if (a != i) consider(LeftElem{i, j, ctx.var(a, b)});
            if (b != j) consider(RightElem{i, j, ctx.var(a, b)});
          }
      }
    if (!best || best_score == score) return std::nullopt;
    word.append(AutWord(n, {std::move(best->first)}));
    cur = std::move(best->second);
    score = best_score;
  }
  if (!rank_conditions(cur)) return std::nullopt;
  return StageResult{std::move(word), std::move(cur)};
}

}  // namespace

StageResult normalize_rank(const SlCurve& c, const RunConfig& cfg) {
  const std::size_t n = c.n();
  if (rank_conditions(c)) return {AutWord(n), c};
  if (auto g = greedy_normalize(c, std::min(2 * n, cfg.max_trials))) return std::move(*g);
  const std::uint64_t stage_seed = derive_seed(cfg.seed, kNormalize);
  // Later stages get expensive fast in the degree, so after the first hit a
  // few more trials compete and the lowest (degree, total degree) wins.
  std::optional<StageResult> best;
  std::pair<int, int> best_cost;
  std::size_t stop = cfg.max_trials;
  for (std::size_t k = 0; k < stop; ++k) {
    const std::size_t len = std::min<std::size_t>(2 + k / 4, 6);
    const unsigned deg = std::min<unsigned>(1 + static_cast<unsigned>(k / 16), cfg.max_payload_degree);
    AutWord w = random_word(derive_seed(stage_seed, k), n, len, deg);
    SlCurve d = apply_word(w, c);
    if (!rank_conditions(d)) continue;
    int total = 0;
    for (const auto& e : d.flattened()) total += std::max(e.degree(), 0);
    const std::pair<int, int> cost{d.degree(), total};
    if (!best || cost < best_cost) {
      best.emplace(std::move(w), std::move(d));
      best_cost = cost;
    }
    stop = std::min(stop, k + 1 + kNormalizeWindow);
  }
  if (best) return std::move(*best);
  exhausted("rank-normalizing word", cfg.max_trials);
}

StageResult generic_projection(const SlCurve& c, const RunConfig& cfg) {
  const std::size_t n = c.n();
  if (n < 3) throw Error(ErrorKind::precondition_failed, "generic projection needs n >= 3");
  if (!rank_conditions(c)) throw Error(ErrorKind::precondition_failed, "rank conditions do not hold");
  const std::uint64_t stage_seed = derive_seed(cfg.seed, kProjection);
  const auto budget = cfg.groebner();
  for (std::size_t k = 0; k < cfg.max_trials; ++k) {
    ScalarMatrix b = k == 0 ? ScalarMatrix::identity(n)
                            : random_unimodular(derive_seed(stage_seed, k), n, 3 + static_cast<long>(k / 8));
    AutWord w(n, {ConstRight{std::move(b)}});
    SlCurve d = apply_word(w, c);
    if (columns_embed(d, n - 1, budget)) return {std::move(w), std::move(d)};
  }
  exhausted("embedding projection", cfg.max_trials);
}

StageResult straighten_first_column(const SlCurve& c, const RunConfig& cfg, std::optional<BezoutSolution>* bezout) {
  const std::size_t n = c.n();
  if (n < 3) throw Error(ErrorKind::precondition_failed, "first-column straightening needs n >= 3");
  if (bezout) bezout->reset();
  if (has_standard_first_column(c)) return {AutWord(n), c};
  const auto budget = cfg.groebner();
  if (!columns_embed(c, n - 1, budget))
    throw Error(ErrorKind::precondition_failed, "the first n-1 columns do not embed");
  EntryContext ctx{n};
  const UniPoly t = UniPoly::variable();

  // (a) separating covector: v^T A(t) has coprime entries.
  const std::uint64_t stage_seed = derive_seed(cfg.seed, kSeparate);
  std::vector<Scalar> v;
  for (std::size_t k = 0;; ++k) {
    if (k == cfg.max_trials) exhausted("separating vector", cfg.max_trials);
    Rng rng(derive_seed(stage_seed, k));
    const long bound = 3 + static_cast<long>(k / 8);
    std::vector<Scalar> cand(n);
    bool nonzero = false;
    for (auto& x : cand) {
      x = Scalar(rng.uniform(-bound, bound));
      nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) continue;
    UniPoly g;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      UniPoly e;
      for (std::size_t i = 0; i < n; ++i) e += cand[i] * c(i, j);
      g = gcd(g, e);
    }
    if (!g.is_zero() && g.degree() == 0) {
      v = std::move(cand);
      break;
    }
  }

  // (b) move v^T A(t) into the last row, columns 2..n.
  ScalarMatrix b = completion_with_last_row(v);
  const ScalarMatrix q = cyclic_shift(n);
  SlCurve base = apply_word(AutWord(n, {ConstLeft{b}, ConstRight{q}}), c);
  if (auto m = linear_section_row_move(base)) {
    b = *m * b;
    base = apply_word(AutWord(n, {ConstLeft{b}, ConstRight{q}}), c);
  }
  AutWord w(n, {ConstLeft{b}, ConstRight{q}});

  // (c) Bezout: sum_k f_nk tilde_k = t - f_n1.
  std::vector<UniPoly> tildes = bezout_tildes(base.row(n - 1));

  // (d) section and lifted payloads.
  MPoly tau = block_section(base, budget);
  std::vector<MPoly> lifted;
  for (const auto& p : tildes) {
    check_lift_size(p, tau);
    lifted.push_back(compose(p, tau));
  }

  // (e) column 1 += sum_k p_k * column k.
  AutWord lift(n);
  for (std::size_t k = 1; k < n; ++k) lift.push_back(RightElem{k, 0, lifted[k - 1]});
  SlCurve cur = apply_word(lift, base);
  w.append(lift);
  if (cur(n - 1, 0) != t) throw Error(ErrorKind::division_obstruction, "corner entry is not t");

  // (f) constant move fixing t = 0, then divided-difference payloads in x_n1.
  std::vector<Scalar> a;
  for (std::size_t i = 0; i + 1 < n; ++i) a.push_back(cur(i, 0).coeff(0));
  AutWord tail(n, {ConstLeft{clearing_matrix(a)}});
  const SlCurve base_of_tail = cur;
  cur = apply_word(tail, cur);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    UniPoly r = cur(i, 0) - UniPoly(i == 0 ? 1 : 0);
    if (r.is_zero()) continue;
    if (!r.coeff(0).is_zero())
      throw Error(ErrorKind::division_obstruction, "column entry " + std::to_string(i + 1) + " misses its value at 0");
    std::vector<Scalar> shifted(r.coeffs().begin() + 1, r.coeffs().end());
    tail.push_back(LeftElem{i, n - 1, -MPoly::from_uni(UniPoly(std::move(shifted)), ctx.nvars(), ctx.x(n - 1, 0))});
  }
  cur = apply_word(tail, base_of_tail);
  w.append(tail);
  if (!has_standard_first_column(cur)) throw Error(ErrorKind::division_obstruction, "first column is not standard");

  if (bezout) *bezout = BezoutSolution{base, std::move(tildes), std::move(tau), std::move(lifted)};
  return {std::move(w), std::move(cur)};
}

StageResult final_rectify(const SlCurve& c) {
  if (!has_standard_first_column(c)) throw Error(ErrorKind::precondition_failed, "first column is not (1, 0, ..., 0, t)");
  const std::size_t n = c.n();
  PolyMatrix m = adjugate(c.entries()) * SlCurve::standard(n).entries();
  AutWord w(n, {CurveRightMul{std::move(m)}});
  SlCurve d = apply_word(w, c);
  if (d != SlCurve::standard(n)) throw Error(ErrorKind::replay_mismatch, "final curve is not standard");
  return {std::move(w), std::move(d)};
}

Certificate rectify(const SlCurve& c, const RunConfig& cfg) {
  const std::size_t n = c.n();
  if (n < 3) throw Error(ErrorKind::unsupported_size, "rectification needs n >= 3; use the SL2 path", std::to_string(n));
  EmbeddingReport report = is_embedding(c, cfg.groebner());
  if (!report.is_embedding) throw Error(ErrorKind::not_an_embedding, report.to_string(), report.to_string());

  Certificate cert{c, {"embedding"}, {}, c};
  if (c == SlCurve::standard(n)) return cert;

  SlCurve cur = c;
  auto push = [&](std::string name, StageResult r, std::vector<std::string> facts,
                  std::optional<BezoutSolution> bz = std::nullopt) {
    cur = r.second;
    cert.stages.push_back(Stage{std::move(name), std::move(r.first), std::move(r.second), std::move(facts), std::move(bz)});
  };

  if (!has_standard_first_column(cur)) {
    push("normalize_rank", normalize_rank(cur, cfg), {"rank_conditions"});
    push("generic_projection", generic_projection(cur, cfg), {"single_const_right", "projection_embeds"});
    std::optional<BezoutSolution> bz;
    auto r = straighten_first_column(cur, cfg, &bz);
    std::vector<std::string> facts;
    if (bz) facts = {"separating_gcd", "bezout_identity", "section_identity", "lift_identity", "lift_support", "corner_is_t"};
    facts.emplace_back("first_column_standard");
    push("straighten_first_column", std::move(r), std::move(facts), std::move(bz));
  }
  push("final_rectify", final_rectify(cur), {"first_column_preserved", "final_is_standard"});
  cert.final = cur;
  return cert;
}

AutWord equivalence(const SlCurve& f, const SlCurve& g, const RunConfig& cfg) {
  if (f.n() != g.n()) throw Error(ErrorKind::size_mismatch, "curves live in different SL_n");
  AutWord w = rectify(f, cfg).word();
  w.append(invert_word(rectify(g, cfg).word()));
  return w;
}

std::vector<std::string> verify_certificate(const Certificate& cert, const GroebnerBudget& budget) {
  const std::size_t n = cert.input.n();
  const UniPoly t = UniPoly::variable();
  std::vector<std::string> done;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::replay_mismatch, what + " fails", what);
    done.push_back(what);
  };

  for (const auto& fact : cert.input_facts) {
    if (fact != "embedding") require(false, "input: unknown fact " + fact);
    require(is_embedding(cert.input, budget).is_embedding, "input: embedding");
  }

  SlCurve prev = cert.input;
  for (const auto& st : cert.stages) {
    const std::string tag = st.name + ": ";
    require(st.word.n() == n && st.curve.n() == n, tag + "size");
    require(apply_word(st.word, prev) == st.curve, tag + "replay");
    const auto& gens = st.word.generators();

    const std::map<std::string, std::function<bool()>> checks{
        {"rank_conditions", [&] { return rank_conditions(st.curve); }},
        {"single_const_right",
         [&] { return gens.size() == 1 && std::holds_alternative<ConstRight>(gens[0]); }},
        {"projection_embeds", [&] { return columns_embed(st.curve, n - 1, budget); }},
        {"separating_gcd",
         [&] {
           if (!st.bezout || gens.size() < 2) return false;
           if (!std::holds_alternative<ConstLeft>(gens[0]) || !std::holds_alternative<ConstRight>(gens[1])) return false;
           if (apply_word(AutWord(n, {gens[0], gens[1]}), prev) != st.bezout->base) return false;
           UniPoly g;
           for (std::size_t j = 1; j < n; ++j) g = gcd(g, st.bezout->base(n - 1, j));
           return g == UniPoly(1);
         }},
        {"bezout_identity",
         [&] {
           if (!st.bezout || st.bezout->tildes.size() != n - 1) return false;
           UniPoly sum;
           for (std::size_t k = 1; k < n; ++k) sum += st.bezout->base(n - 1, k) * st.bezout->tildes[k - 1];
           return sum == t - st.bezout->base(n - 1, 0);
         }},
        {"section_identity",
         [&] {
           if (!st.bezout || st.bezout->section.nvars() != EntryContext{n}.nvars()) return false;
           if (!support_in_block(st.bezout->section, n)) return false;
           return st.bezout->section.eval_uni(row_values(st.bezout->base)) == t;
         }},
        {"lift_identity",
         [&] {
           if (!st.bezout || st.bezout->lifted.size() != st.bezout->tildes.size()) return false;
           for (std::size_t k = 0; k < st.bezout->lifted.size(); ++k)
             if (st.bezout->lifted[k] != compose(st.bezout->tildes[k], st.bezout->section)) return false;
           return true;
         }},
        {"lift_support",
         [&] {
           if (!st.bezout) return false;
           return std::all_of(st.bezout->lifted.begin(), st.bezout->lifted.end(),
                              [&](const MPoly& p) { return support_in_block(p, n); });
         }},
        {"corner_is_t",
         [&] {
           if (!st.bezout || gens.size() < n + 1) return false;
           AutWord head(n, {gens[0], gens[1]});
           for (std::size_t k = 1; k < n; ++k) {
             const auto* r = std::get_if<RightElem>(&gens[k + 1]);
             if (!r || r->i != k || r->j != 0 || r->q != st.bezout->lifted[k - 1]) return false;
             head.push_back(gens[k + 1]);
           }
           return apply_word(head, prev)(n - 1, 0) == t;
         }},
        {"first_column_standard", [&] { return has_standard_first_column(st.curve); }},
        {"first_column_preserved",
         [&] {
           if (gens.size() != 1) return false;
           const auto* m = std::get_if<CurveRightMul>(&gens[0]);
           if (!m) return false;
           for (std::size_t i = 0; i < n; ++i)
             if (m->m(i, 0) != UniPoly(i == 0 ? 1 : 0)) return false;
           return determinant(m->m) == UniPoly(1);
         }},
        {"final_is_standard", [&] { return st.curve == SlCurve::standard(n); }},
    };
    for (const auto& fact : st.facts) {
      auto it = checks.find(fact);
      require(it != checks.end() && it->second(), tag + fact);
    }
    prev = st.curve;
  }
  require(cert.final == prev, "final: replay");
  require(cert.final == SlCurve::standard(n), "final: standard");
  return done;
}

}  // namespace slnrect
