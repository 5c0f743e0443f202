#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slnrect/autoword.hpp"
#include "slnrect/config.hpp"
#include "slnrect/slcurve.hpp"

namespace slnrect {

/// Bezout data of the first-column straightening. `base` is the curve after
/// the separating moves; with f = base:
///   sum_k f(n,k) * tildes[k] == t - f(n,1)       (k = 2..n)
///   section(f) == t                              (section uses columns 2..n)
///   lifted[k] == tildes[k] o section
struct BezoutSolution {
  SlCurve base;
  std::vector<UniPoly> tildes;
  MPoly section;
  std::vector<MPoly> lifted;
};

struct Stage {
  std::string name;
  AutWord word;
  SlCurve curve;
  /// Names of predicates that held when the stage was produced; each one is
  /// recomputed by verify_certificate.
  std::vector<std::string> facts;
  std::optional<BezoutSolution> bezout;
};

struct Certificate {
  SlCurve input;
  std::vector<std::string> input_facts;
  std::vector<Stage> stages;
  SlCurve final;

  AutWord word() const;
};

using StageResult = std::pair<AutWord, SlCurve>;

/// Word after which det(f(0) - f(1)) != 0 and det f'(0) != 0: a greedy pass
/// over single elementary moves, then a seeded random search.
StageResult normalize_rank(const SlCurve& c, const RunConfig& cfg);
/// A single ConstRight after which the first n-1 columns embed.
StageResult generic_projection(const SlCurve& c, const RunConfig& cfg);
/// Brings the first column to (1, 0, ..., 0, t). Requires the first n-1
/// columns to embed.
StageResult straighten_first_column(const SlCurve& c, const RunConfig& cfg,
                                    std::optional<BezoutSolution>* bezout = nullptr);
/// X |-> X * c(x_n1)^{-1} * E_n1(x_n1), for c with standard first column.
StageResult final_rectify(const SlCurve& c);

/// Full pipeline for n >= 3 embeddings.
Certificate rectify(const SlCurve& c, const RunConfig& cfg);
/// Word carrying f to g.
AutWord equivalence(const SlCurve& f, const SlCurve& g, const RunConfig& cfg);

/// Replays every stage and recomputes every recorded fact; returns the names
/// of the checks performed. Throws Error(replay_mismatch) on the first
/// disagreement.
std::vector<std::string> verify_certificate(const Certificate& cert, const GroebnerBudget& budget = {});

bool has_standard_first_column(const SlCurve& c);

/// Bezout step on a last row (f_n1, ..., f_nn) whose entries f_n2..f_nn are
/// coprime: the xgcd cofactors scaled by t - f_n1.
std::vector<UniPoly> bezout_tildes(std::span<const UniPoly> last_row);

/// Section polynomial tau in the entries of columns 2..n with tau(c) == t.
/// Requires those columns to embed.
MPoly block_section(const SlCurve& c, const GroebnerBudget& budget = {});

/// Unit-ideal test on the divided differences of the first `cols` columns.
bool columns_embed(const SlCurve& c, std::size_t cols, const GroebnerBudget& budget = {});

}  // namespace slnrect
