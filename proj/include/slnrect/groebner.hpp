#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slnrect/mpoly.hpp"

namespace slnrect {

enum class OrderKind { lex, grevlex };

/// A monomial order on the variables of a context. `ranking[0]` is the
/// largest variable, `ranking[1]` the next and so on; an empty ranking
/// means variable 0 > variable 1 > ...
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<std::size_t> ranking;
};

/// Deterministic resource limits. Exceeding either raises
/// Error(resource_exceeded).
struct GroebnerBudget {
  std::uint64_t max_steps = 1'000'000;  // single-term reduction steps
  std::size_t max_basis = 5'000;        // polynomials ever added to the basis
};

/// Leading exponent of a nonzero polynomial under `order`.
Exponents leading_exponents(const MPoly& p, const MonomialOrder& order);

/// Reduced Groebner basis (monic, sorted by leading monomial, largest first).
/// The zero ideal yields an empty basis; the unit ideal yields [1].
std::vector<MPoly> groebner(std::span<const MPoly> gens, const MonomialOrder& order,
                            const GroebnerBudget& budget = {});

/// Fully reduced remainder of f by a Groebner basis for `order`.
MPoly normal_form(const MPoly& f, std::span<const MPoly> basis, const MonomialOrder& order,
                  const GroebnerBudget& budget = {});

/// True iff 1 is in the ideal, i.e. the generators have no common zero over C.
bool is_unit_ideal(std::span<const MPoly> gens, const GroebnerBudget& budget = {});

struct Assignment {
  std::size_t var;
  UniPoly value;
};

/// A polynomial tau in the assigned variables with tau(values) == t.
///
/// Works in a context of `nvars` variables where `t_var` stands for the
/// parameter. Eliminates t from the graph ideal {v - value(v)} under lex with
/// t largest and reads tau off the basis element whose leading monomial is t.
/// Throws Error(not_a_section) when t is not a polynomial in the values.
MPoly implicitize_section(std::size_t nvars, std::size_t t_var, std::span<const Assignment> assignments,
                          const GroebnerBudget& budget = {});

/// Looks for tau of total degree <= max_degree with tau(values) == t by
/// solving the linear system on its coefficients. Much cheaper than
/// elimination when a low-degree section exists.
std::optional<MPoly> section_by_ansatz(std::size_t nvars, std::span<const Assignment> assignments,
                                       unsigned max_degree);

}  // namespace slnrect
