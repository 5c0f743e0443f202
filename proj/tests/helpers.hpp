#pragma once

#include <initializer_list>
#include <vector>

#include "slnrect/matrix.hpp"
#include "slnrect/slcurve.hpp"
#include "slnrect/unipoly.hpp"

namespace testing_helpers {

using slnrect::PolyMatrix;
using slnrect::Scalar;
using slnrect::UniPoly;

/// Polynomial from ascending integer coefficients.
inline UniPoly P(std::initializer_list<long> asc) {
  std::vector<Scalar> c;
  for (long v : asc) c.emplace_back(v);
  return UniPoly(std::move(c));
}

inline const UniPoly T = UniPoly::variable();

inline PolyMatrix mat(std::initializer_list<std::initializer_list<UniPoly>> rows) {
  PolyMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& e : r) m(i, j++) = e;
    ++i;
  }
  return m;
}

inline slnrect::SlCurve curve(std::initializer_list<std::initializer_list<UniPoly>> rows) {
  return slnrect::SlCurve::validate(mat(rows));
}

}  // namespace testing_helpers
