#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "psc/bipoly.hpp"
#include "psc/trace.hpp"
#include "psc/unipoly.hpp"

namespace psc {

/// The linear form a(x) -> sum_i w_i [x^i] a(x) on polynomials of degree < n.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(std::vector<FieldElem> weights) : weights_(std::move(weights)) {}
    explicit LinearForm(const UniPoly& weights)
        : weights_(weights.coeffs().begin(), weights.coeffs().end()) {}

    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const FieldElem> weights() const noexcept { return weights_; }
    FieldElem operator[](std::size_t i) const { return weights_[i]; }

    /// Applies the form to a, treating missing coefficients as zero.
    FieldElem apply(const UniPoly& a, const PrimeModulus& m) const;

private:
    std::vector<FieldElem> weights_;
};

enum class RowParity { Even, Odd };

struct ProjectionState {
    BiPoly numerator;
    BiPoly denominator;
    std::size_t n;
};

/// One halving step of [x^(n-1)] (P / Q) mod y^m:
///   U = P Q(-x) mod x^n mod y^m,  P' = rows of U with the given parity,
///   A = Q Q(-x) mod x^n mod y^m,  Q' = even rows of A,  n' = ceil(n/2).
/// Throws Error{BadConstantTerm} unless [x^0 y^0] Q = 1.
ProjectionState graeffe_step_proj(const BiPoly& numerator, const BiPoly& denominator,
                                  std::size_t n, std::size_t m, RowParity parity,
                                  const PrimeModulus& mod);

/// f_i = w(g^i mod x^n) for i < m, in O(M(n) log m + M(m)).
/// Throws Error{BadDimensions} if w.size() != n, g.len() > n, or n, m < 1.
UniPoly power_projection(const LinearForm& w, const UniPoly& g, std::size_t n, std::size_t m,
                         const PrimeModulus& mod, GraeffeTrace* trace = nullptr);

namespace detail {

/// [x^(n-1)] (P / Q) mod y^m for arbitrary P, Q with [x^0 y^0] Q = 1.
UniPoly project_rational(BiPoly numerator, BiPoly denominator, std::size_t n, std::size_t m,
                         const PrimeModulus& mod, GraeffeTrace* trace = nullptr);

}  // namespace detail

}  // namespace psc
