#pragma once

#include <cstddef>

#include "psc/bipoly.hpp"
#include "psc/trace.hpp"
#include "psc/unipoly.hpp"

namespace psc {

/// Arguments of one level of the composition recursion, which computes
/// slice_y(P(y) / Q(x, y), d, m) mod x^n.
struct CompState {
    std::size_t n = 1;
    std::size_t d = 0;
    std::size_t m = 1;
    UniPoly numerator;    // P(y), length m
    BiPoly denominator;   // Q(x, y), [x^0 y^0] Q = 1
    std::size_t qdeg_y = 0;  // an upper bound on deg_y Q, at most m - 1
};

/// Rows l..r-1 of a in y, shifted down to start at 0. Rows past the end of
/// a are zero. The bivariate form keeps at least one y-row.
BiPoly slice_y(const BiPoly& a, std::size_t l, std::size_t r);
UniPoly slice_y(const UniPoly& a, std::size_t l, std::size_t r);

/// Throws Error{BadConstantTerm} unless [x^0 y^0] Q = 1, and
/// Error{BadDimensions} for n = 0, d > m, P.len() > m, or a qdeg_y that is
/// not a valid bound on deg_y Q.
BiPoly comp_rec(const CompState& state, const PrimeModulus& mod, GraeffeTrace* trace = nullptr);

/// f(g(x)) mod x^n, length n, in O(M(n) log m + M(m)) with m = max(f.len(), 1).
/// No condition on g(0). Throws Error{BadDimensions} for n = 0.
UniPoly compose_series(const UniPoly& f, const UniPoly& g, std::size_t n, const PrimeModulus& mod,
                       GraeffeTrace* trace = nullptr);

}  // namespace psc
