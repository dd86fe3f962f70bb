#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "psc/field.hpp"
#include "psc/unipoly.hpp"

namespace psc {

/// Component-wise degree pair; an axis is nullopt for the zero polynomial.
struct Bidegree {
    std::optional<std::size_t> x;
    std::optional<std::size_t> y;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Dense bivariate polynomial on an nx-by-ny grid, stored x-major:
/// entry (i, j) is the coefficient of x^i y^j at index i * ny + j.
/// The grid shape bounds the bidegree by (nx - 1, ny - 1).
class BiPoly {
public:
    BiPoly() : BiPoly(1, 1) {}
    /// Zero grid. Throws Error{BadDimensions} if either extent is 0.
    BiPoly(std::size_t nx, std::size_t ny);

    /// Single x-row holding a polynomial in y.
    static BiPoly from_y(const UniPoly& f);
    /// Single y-column holding a polynomial in x.
    static BiPoly from_x(const UniPoly& f);

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }

    FieldElem operator()(std::size_t i, std::size_t j) const { return grid_[i * ny_ + j]; }
    FieldElem& operator()(std::size_t i, std::size_t j) { return grid_[i * ny_ + j]; }
    /// Coefficient of x^i y^j, zero outside the grid.
    FieldElem at(std::size_t i, std::size_t j) const noexcept {
        return i < nx_ && j < ny_ ? grid_[i * ny_ + j] : FieldElem{};
    }

    /// Coefficients of x^i as a polynomial in y.
    std::span<const FieldElem> row(std::size_t i) const { return {grid_.data() + i * ny_, ny_}; }
    std::span<FieldElem> row(std::size_t i) { return {grid_.data() + i * ny_, ny_}; }
    UniPoly row_poly(std::size_t i) const;

    std::span<const FieldElem> grid() const noexcept { return grid_; }

    /// Degrees found by scanning for nonzero entries.
    Bidegree scanned_bidegree() const noexcept;
    /// Bound implied by the grid shape.
    Bidegree shape_bidegree() const noexcept { return {nx_ - 1, ny_ - 1}; }
    bool is_zero() const noexcept;

    /// Same coefficients on an nx-by-ny grid, cutting or zero-padding.
    BiPoly resized(std::size_t nx, std::size_t ny) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::size_t nx_;
    std::size_t ny_;
    std::vector<FieldElem> grid_;
};

/// Product via Kronecker substitution x -> z, y -> z^(a.nx + b.nx - 1).
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b, const PrimeModulus& m);
BiPoly bipoly_mul_schoolbook(const BiPoly& a, const BiPoly& b, const PrimeModulus& m);

/// a(-x, y).
BiPoly negate_x(const BiPoly& a, const PrimeModulus& m);

/// E with E(x^2, y) + x O(x^2, y) = a. even_part_x has ceil(nx/2) rows,
/// odd_part_x has floor(nx/2) rows (one zero row when nx = 1).
BiPoly even_part_x(const BiPoly& a);
BiPoly odd_part_x(const BiPoly& a);

/// a(x^2, y), with 2 * nx - 1 rows.
BiPoly substitute_x_squared(const BiPoly& a);

/// a mod x^n mod y^m; the shape shrinks to (min(nx, n), min(ny, m)).
BiPoly truncate_xy(const BiPoly& a, std::size_t n, std::size_t m);

/// Even part of Q(x) Q(-x) mod x^n mod y^m, as a polynomial in x^2.
/// Equal to even_part_x(truncate_xy(bipoly_mul(q, negate_x(q)), n, m)).
BiPoly graeffe_even(const BiPoly& q, std::size_t n, std::size_t m, const PrimeModulus& mod);

}  // namespace psc
