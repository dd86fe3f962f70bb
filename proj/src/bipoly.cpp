#include "psc/bipoly.hpp"

#include <algorithm>
#include <string>

namespace psc {

BiPoly::BiPoly(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
    if (nx == 0 || ny == 0) {
        throw Error(ErrorKind::BadDimensions, "bivariate grid must be at least 1x1, got " +
                                                  std::to_string(nx) + "x" + std::to_string(ny));
    }
    grid_.assign(nx * ny, FieldElem{});
}

BiPoly BiPoly::from_y(const UniPoly& f) {
    BiPoly out(1, std::max<std::size_t>(f.len(), 1));
    std::copy(f.coeffs().begin(), f.coeffs().end(), out.grid_.begin());
    return out;
}

BiPoly BiPoly::from_x(const UniPoly& f) {
    BiPoly out(std::max<std::size_t>(f.len(), 1), 1);
    std::copy(f.coeffs().begin(), f.coeffs().end(), out.grid_.begin());
    return out;
}

UniPoly BiPoly::row_poly(std::size_t i) const {
    const auto r = row(i);
    return UniPoly(std::vector<FieldElem>(r.begin(), r.end()));
}

Bidegree BiPoly::scanned_bidegree() const noexcept {
    Bidegree d;
    for (std::size_t i = 0; i < nx_; ++i) {
        for (std::size_t j = 0; j < ny_; ++j) {
            if (grid_[i * ny_ + j].value == 0) continue;
            d.x = i;
            if (!d.y || *d.y < j) d.y = j;
        }
    }
    return d;
}

bool BiPoly::is_zero() const noexcept {
    return std::all_of(grid_.begin(), grid_.end(), [](FieldElem c) { return c.value == 0; });
}

BiPoly BiPoly::resized(std::size_t nx, std::size_t ny) const {
    BiPoly out(nx, ny);
    const std::size_t rows = std::min(nx, nx_), cols = std::min(ny, ny_);
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy_n(grid_.begin() + i * ny_, cols, out.grid_.begin() + i * ny);
    }
    return out;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b, const PrimeModulus& m) {
    const std::size_t stride = a.nx() + b.nx() - 1;
    const std::size_t out_ny = a.ny() + b.ny() - 1;

    auto pack = [stride](const BiPoly& f) {
        UniPoly packed = UniPoly::zeros((f.ny() - 1) * stride + f.nx());
        for (std::size_t i = 0; i < f.nx(); ++i) {
            for (std::size_t j = 0; j < f.ny(); ++j) packed[i + j * stride] = f(i, j);
        }
        return packed;
    };
    const UniPoly pa = pack(a);
    const UniPoly product = &a == &b ? poly_mul(pa, pa, m) : poly_mul(pa, pack(b), m);

    BiPoly out(stride, out_ny);
    for (std::size_t j = 0; j < out_ny; ++j) {
        for (std::size_t i = 0; i < stride; ++i) out(i, j) = product.coeff(i + j * stride);
    }
    return out;
}

BiPoly bipoly_mul_schoolbook(const BiPoly& a, const BiPoly& b, const PrimeModulus& m) {
    BiPoly out(a.nx() + b.nx() - 1, a.ny() + b.ny() - 1);
    for (std::size_t i1 = 0; i1 < a.nx(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.ny(); ++j1) {
            const FieldElem c = a(i1, j1);
            if (c.value == 0) continue;
            for (std::size_t i2 = 0; i2 < b.nx(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.ny(); ++j2) {
                    FieldElem& dst = out(i1 + i2, j1 + j2);
                    dst = field_add(dst, field_mul(c, b(i2, j2), m), m);
                }
            }
        }
    }
    return out;
}

BiPoly negate_x(const BiPoly& a, const PrimeModulus& m) {
    BiPoly out = a;
    for (std::size_t i = 1; i < a.nx(); i += 2) {
        for (FieldElem& c : out.row(i)) c = field_neg(c, m);
    }
    return out;
}

namespace {

BiPoly rows_with_parity(const BiPoly& a, std::size_t first, std::size_t count) {
    BiPoly out(std::max<std::size_t>(count, 1), a.ny());
    for (std::size_t i = 0; i < count; ++i) {
        const auto src = a.row(first + 2 * i);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

}  // namespace

BiPoly even_part_x(const BiPoly& a) { return rows_with_parity(a, 0, (a.nx() + 1) / 2); }

BiPoly odd_part_x(const BiPoly& a) { return rows_with_parity(a, 1, a.nx() / 2); }

BiPoly substitute_x_squared(const BiPoly& a) {
    BiPoly out(2 * a.nx() - 1, a.ny());
    for (std::size_t i = 0; i < a.nx(); ++i) {
        const auto src = a.row(i);
        std::copy(src.begin(), src.end(), out.row(2 * i).begin());
    }
    return out;
}

BiPoly graeffe_even(const BiPoly& q, std::size_t n, std::size_t m, const PrimeModulus& mod) {
    if (n == 0 || m == 0) throw Error(ErrorKind::BadDimensions, "truncation orders must be positive");
    // Q(x) Q(-x) = E(x^2) with E = Qe^2 - x Qo^2.
    const std::size_t rows = (std::min(2 * q.nx() - 1, n) + 1) / 2;
    const std::size_t cols = std::min(2 * q.ny() - 1, m);
    const BiPoly qe = truncate_xy(even_part_x(q), rows, cols);
    const BiPoly ee = bipoly_mul(qe, qe, mod);
    BiPoly out = ee.resized(rows, cols);
    if (q.nx() > 1 && rows > 1) {
        const BiPoly qo = truncate_xy(odd_part_x(q), rows - 1, cols);
        const BiPoly oo = bipoly_mul(qo, qo, mod);
        for (std::size_t i = 0; i + 1 < rows && i < oo.nx(); ++i) {
            const std::size_t width = std::min(cols, oo.ny());
            for (std::size_t j = 0; j < width; ++j) {
                out(i + 1, j) = field_sub(out(i + 1, j), oo(i, j), mod);
            }
        }
    }
    return out;
}

BiPoly truncate_xy(const BiPoly& a, std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw Error(ErrorKind::BadDimensions, "truncation orders must be positive");
    return a.resized(std::min(a.nx(), n), std::min(a.ny(), m));
}

}  // namespace psc
