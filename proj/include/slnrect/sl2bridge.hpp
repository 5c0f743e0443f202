#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "slnrect/autoword.hpp"
#include "slnrect/groebner.hpp"
#include "slnrect/slcurve.hpp"

namespace slnrect {

/// A curve t |-> (g1, g2, g3) in C^3.
struct C3Triple {
  UniPoly g1;
  UniPoly g2;
  UniPoly g3;

  friend bool operator==(const C3Triple&, const C3Triple&) = default;
};

/// Coordinates of C^3 as used by tame moves: x = g1, y = g2, z = g3.
enum class C3Axis { x, y, z };

/// Coordinate `axis` += h(other coordinates). h lives in three variables
/// (x = 0, y = 1, z = 2) and must not involve `axis`.
struct C3Elementary {
  C3Axis axis;
  MPoly h;
};

/// (x, y, z)^T |-> A (x, y, z)^T with A invertible.
struct C3Linear {
  ScalarMatrix a;
};

using C3Move = std::variant<C3Elementary, C3Linear>;

struct C3Word {
  std::vector<C3Move> moves;
};

C3Triple apply_c3_word(const C3Word& w, const C3Triple& tr);

/// Rows (g1, (g1 g3 - 1)/g2), (g2, g3). Throws Error(divisibility_fails)
/// with the remainder as detail when g2 does not divide g1 g3 - 1.
SlCurve lift_c3_to_sl2(const C3Triple& tr);

bool divisibility_holds(const C3Triple& tr);

struct DivisibilityResult {
  C3Word word;
  C3Triple triple;
};

/// Best-effort search for a tame automorphism of C^3 after which g2 divides
/// g1 g3 - 1. Each of the `budget` attempts shifts g1 by a constant until it
/// is coprime to g2 and then solves for z |-> z + q(x) over C[t]/(g2);
/// attempts after the first start with a random move y |-> y + r(x, z).
/// Throws Error(heuristic_failed) when every attempt fails, which says
/// nothing about whether such an automorphism exists.
DivisibilityResult attempt_divisibility(const C3Triple& tr, std::uint64_t seed, std::size_t budget,
                                        const GroebnerBudget& gb = {});

enum class PlaneAxis { x, z };

/// axis x: x |-> x + h(z); axis z: z |-> z + h(x). Requires h(0) == 0.
struct PlaneElementary {
  PlaneAxis axis;
  UniPoly h;
};

/// (x, z)^T |-> A (x, z)^T with A invertible 2 x 2.
struct PlaneLinear {
  ScalarMatrix a;
};

using PlaneMove = std::variant<PlaneElementary, PlaneLinear>;

struct PlaneTameWord {
  std::vector<PlaneMove> moves;
};

using PlaneCurve = std::pair<UniPoly, UniPoly>;

PlaneCurve apply_plane_word(const PlaneTameWord& w, const PlaneCurve& c);

/// Seeded origin-preserving word: `len` moves alternating between the two
/// elementary axes (h of degree 1..max_deg with integer coefficients), each
/// followed by a random integer linear move with probability 1/3.
PlaneTameWord random_plane_word(std::uint64_t seed, std::size_t len, unsigned max_deg);

/// t |-> a t + b.
struct AffineReparam {
  Scalar a{1};
  Scalar b{0};

  UniPoly as_poly() const;
  /// The inverse substitution t |-> (t - b) / a.
  UniPoly inverse_poly() const;
};

struct AmsResult {
  PlaneTameWord word;
  /// The word sends the input to t |-> (1, a t + b).
  AffineReparam reparam;
};

/// Degree-reduction straightening of an embedded line in C^2 that misses the
/// origin. Throws Error(not_an_embedding), Error(precondition_failed) if the
/// curve meets the origin, or Error(degree_obstruction) if neither degree
/// divides the other.
AmsResult ams_straighten(const PlaneCurve& c, const GroebnerBudget& gb = {});

/// The SL_2 word acting on first columns as w acts on the plane.
AutWord lift_plane_word(const PlaneTameWord& w);

struct Sl2Rectification {
  AmsResult ams;
  /// apply_word(word, c) == E_21(a t + b).
  AutWord word{2};
};

/// Rectification of an SL_2 curve whose first column is an embedding.
Sl2Rectification rectify_sl2(const SlCurve& c, const GroebnerBudget& gb = {});

/// Entry-wise composition c(p(t)).
SlCurve reparametrize(const SlCurve& c, const UniPoly& p);

}  // namespace slnrect
