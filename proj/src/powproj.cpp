#include "psc/powproj.hpp"

#include <string>

namespace psc {

FieldElem LinearForm::apply(const UniPoly& a, const PrimeModulus& m) const {
    FieldElem acc{};
    const std::size_t len = std::min(a.len(), weights_.size());
    for (std::size_t i = 0; i < len; ++i) acc = field_add(acc, field_mul(weights_[i], a[i], m), m);
    return acc;
}

namespace {

void require_unit_constant(const BiPoly& q) {
    if (q(0, 0).value != 1) throw Error(ErrorKind::BadConstantTerm, "[x^0 y^0] Q must be 1");
}

}  // namespace

ProjectionState graeffe_step_proj(const BiPoly& numerator, const BiPoly& denominator,
                                  std::size_t n, std::size_t m, RowParity parity,
                                  const PrimeModulus& mod) {
    require_unit_constant(denominator);
    const std::size_t half = (n + 1) / 2;
    const BiPoly q_neg = negate_x(denominator, mod);

    const BiPoly u = truncate_xy(bipoly_mul(numerator, q_neg, mod), n, m);
    BiPoly next_p = parity == RowParity::Even ? even_part_x(u) : odd_part_x(u);
    next_p = next_p.resized(half, next_p.ny());

    BiPoly next_q = graeffe_even(denominator, n, m, mod);
    return {std::move(next_p), std::move(next_q), half};
}

namespace detail {

UniPoly project_rational(BiPoly numerator, BiPoly denominator, std::size_t n, std::size_t m,
                         const PrimeModulus& mod, GraeffeTrace* trace) {
    if (n == 0 || m == 0) throw Error(ErrorKind::BadDimensions, "n and m must be positive");
    require_unit_constant(denominator);
    if (trace) {
        trace->n = n;
        trace->m = m;
        trace->levels.clear();
    }
    auto record = [&](std::size_t level, std::size_t cur_n) {
        if (!trace) return;
        LevelRecord r;
        r.level = level;
        r.n = cur_n;
        r.numerator_shape = numerator.shape_bidegree();
        r.numerator_scanned = numerator.scanned_bidegree();
        r.denominator_shape = denominator.shape_bidegree();
        r.denominator_scanned = denominator.scanned_bidegree();
        trace->levels.push_back(r);
    };

    std::size_t level = 0;
    while (n > 1) {
        record(level++, n);
        // The parity is decided by the current n, before it is halved.
        const RowParity parity = (n - 1) % 2 == 0 ? RowParity::Even : RowParity::Odd;
        auto next = graeffe_step_proj(numerator, denominator, n, m, parity, mod);
        numerator = std::move(next.numerator);
        denominator = std::move(next.denominator);
        n = next.n;
    }
    record(level, n);

    const UniPoly den = truncate(denominator.row_poly(0), std::min(denominator.ny(), m));
    return truncate(poly_mul(numerator.row_poly(0), poly_recip(den, m, mod), mod), m);
}

}  // namespace detail

UniPoly power_projection(const LinearForm& w, const UniPoly& g, std::size_t n, std::size_t m,
                         const PrimeModulus& mod, GraeffeTrace* trace) {
    if (n == 0 || m == 0) throw Error(ErrorKind::BadDimensions, "n and m must be positive");
    if (w.size() != n) {
        throw Error(ErrorKind::BadDimensions, "linear form has " + std::to_string(w.size()) +
                                                  " weights, expected " + std::to_string(n));
    }
    if (g.len() > n) {
        throw Error(ErrorKind::BadDimensions,
                    "g has length " + std::to_string(g.len()) + " > n = " + std::to_string(n));
    }

    // P = w^R(x) = sum_j w_{n-1-j} x^j
    BiPoly p(n, 1);
    for (std::size_t j = 0; j < n; ++j) p(j, 0) = w[n - 1 - j];

    // Q = 1 - y g(x) mod y^m
    BiPoly q(std::max<std::size_t>(g.len(), 1), std::min<std::size_t>(2, m));
    q(0, 0) = FieldElem{1};
    if (m > 1) {
        for (std::size_t i = 0; i < g.len(); ++i) q(i, 1) = field_neg(g[i], mod);
    }
    return detail::project_rational(std::move(p), std::move(q), n, m, mod, trace);
}

}  // namespace psc
