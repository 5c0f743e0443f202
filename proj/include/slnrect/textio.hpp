#pragma once

#include <string>
#include <string_view>

#include "slnrect/autoword.hpp"
#include "slnrect/mpoly.hpp"
#include "slnrect/rectifier.hpp"
#include "slnrect/sl2bridge.hpp"
#include "slnrect/slcurve.hpp"

namespace slnrect {

/// First line of every file.
inline constexpr std::string_view kFormatHeader = "slnrectify/1";

/// Parses an expression such as "3/2*x1_2^2 - (1+i)*t + 1" over the given
/// variable names. `i` is the imaginary unit. Columns in errors are counted
/// from `column` (1-based), on line `line`.
MPoly parse_mpoly(std::string_view text, const VarNames& names, std::size_t line = 1, std::size_t column = 1);
UniPoly parse_unipoly(std::string_view text, const std::string& var = "t", std::size_t line = 1,
                      std::size_t column = 1);

// Every format_* output is canonical, and parse_* accepts it back unchanged.
// Blank lines and lines starting with '#' are ignored by the parsers.
//
//   curve:       "curve n=<n>", then "entry <i> <j> : <poly in t>" for all entries
//   word:        "word n=<n>", then one generator per line:
//                  left <i> <j> : <poly>        right <i> <j> : <poly>
//                  const_left : <matrix>        const_right : <matrix>
//                  gl_pair : <matrix>           curve_right_mul : <matrix over s>
//                payloads use x<i>_<j>; matrices are "a, b ; c, d"
//   triple:      "triple", then "g1 : ...", "g2 : ...", "g3 : ..."
//   tame word:   "tame n=2" (coordinates x, z) or "tame n=3" (x, y, z), then
//                  shift <axis> : <poly in the other coordinates>
//                  linear : <matrix>
//   certificate: "certificate n=<n>" followed by begin/end blocks (see
//                format_certificate)

std::string format_curve(const SlCurve& c);
SlCurve parse_curve(std::string_view text);

std::string format_word(const AutWord& w);
AutWord parse_word(std::string_view text);

std::string format_triple(const C3Triple& tr);
C3Triple parse_triple(std::string_view text);

std::string format_c3_word(const C3Word& w);
C3Word parse_c3_word(std::string_view text);

std::string format_plane_word(const PlaneTameWord& w);
PlaneTameWord parse_plane_word(std::string_view text);

/// Layout:
///   certificate n=<n>
///   begin input ... end input          (entry lines)
///   fact input <name>
///   begin stage <name>
///     begin word ... end word          (generator lines)
///     begin curve ... end curve
///     fact <name>
///     begin bezout                     (optional)
///       begin base ... end base
///       tilde <k> : ...   section : ...   lifted <k> : ...
///     end bezout
///   end stage
///   begin final ... end final
///
/// Syntax errors raise ParseError. Well-formed text whose data is not
/// consistent (a curve with det != 1, an invalid generator) raises
/// Error(replay_mismatch), since that is what an edited certificate looks like.
std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace slnrect
