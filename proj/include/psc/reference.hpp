#pragma once

#include <cstddef>

#include "psc/field.hpp"
#include "psc/powproj.hpp"
#include "psc/unipoly.hpp"

namespace psc::reference {

// Brute-force oracles. With Multiplication::Schoolbook they use nothing but
// the field operations, so they stay independent of the NTT, Kronecker and
// Graeffe code they are used to check.

enum class Multiplication {
    Schoolbook,  // independent oracle, O(n^2) per product
    Fast,        // poly_mul; the O(m M(n)) baseline for benchmarks
};

/// f(g) mod x^n by Horner's rule, truncating after every step.
UniPoly compose_horner(const UniPoly& f, const UniPoly& g, std::size_t n, const PrimeModulus& mod,
                       Multiplication mul = Multiplication::Schoolbook);

/// w(g^i mod x^n) for i < m by keeping a running power of g.
UniPoly powproj_naive(const LinearForm& w, const UniPoly& g, std::size_t n, std::size_t m,
                      const PrimeModulus& mod, Multiplication mul = Multiplication::Schoolbook);

/// sum_i a_i b_i over the common prefix.
FieldElem inner_product(std::span<const FieldElem> a, std::span<const FieldElem> b,
                        const PrimeModulus& mod);

/// <w, composed> == <f, projected>.
bool duality_holds(const UniPoly& f, const LinearForm& w, const UniPoly& composed,
                   const UniPoly& projected, const PrimeModulus& mod);

enum class Route { Fast, Oracle };

/// Computes f(g) mod x^n and the projections of w on the powers g^i,
/// i < m, each by the chosen route, and tests the transposition identity
///   <w, f(g) mod x^n> = <f, (w(g^i mod x^n))_i>.
/// f is zero-padded to length m; requires f.len() <= m and g.len() <= n.
bool duality_check(const UniPoly& f, const UniPoly& g, const LinearForm& w, std::size_t n,
                   std::size_t m, const PrimeModulus& mod, Route compose_route = Route::Fast,
                   Route projection_route = Route::Fast);

}  // namespace psc::reference
