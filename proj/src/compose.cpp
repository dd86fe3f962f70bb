#include "psc/compose.hpp"

#include <algorithm>
#include <string>

namespace psc {

BiPoly slice_y(const BiPoly& a, std::size_t l, std::size_t r) {
    if (l > r) throw Error(ErrorKind::BadDimensions, "slice_y: l > r");
    BiPoly out(a.nx(), std::max<std::size_t>(r - l, 1));
    const std::size_t hi = std::min(r, a.ny());
    if (l >= hi) return out;
    for (std::size_t i = 0; i < a.nx(); ++i) {
        const auto src = a.row(i);
        std::copy(src.begin() + l, src.begin() + hi, out.row(i).begin());
    }
    return out;
}

UniPoly slice_y(const UniPoly& a, std::size_t l, std::size_t r) {
    if (l > r) throw Error(ErrorKind::BadDimensions, "slice_y: l > r");
    UniPoly out = UniPoly::zeros(r - l);
    for (std::size_t i = l; i < std::min(r, a.len()); ++i) out[i - l] = a[i];
    return out;
}

namespace {

struct Recursion {
    const UniPoly& numerator;
    std::size_t m;
    const PrimeModulus& mod;
    GraeffeTrace* trace;

    BiPoly run(std::size_t n, std::size_t d, const BiPoly& q, std::size_t qdeg_y,
               std::size_t depth) {
        if (trace) {
            if (trace->levels.size() <= depth) trace->levels.resize(depth + 1);
            LevelRecord& r = trace->levels[depth];
            r.level = depth;
            r.n = n;
            r.denominator_shape = q.shape_bidegree();
            r.denominator_scanned = q.scanned_bidegree();
            r.tracked_qdeg_y = qdeg_y;
        }

        if (n == 1) {
            const UniPoly den = truncate(q.row_poly(0), std::min(q.ny(), m));
            const UniPoly c = truncate(poly_mul(numerator, poly_recip(den, m, mod), mod), m);
            return BiPoly::from_y(slice_y(c, d, m)).resized(1, std::max<std::size_t>(m - d, 1));
        }

        const BiPoly v = graeffe_even(q, n, m, mod);
        const std::size_t e = d > qdeg_y ? d - qdeg_y : 0;
        const std::size_t half = (n + 1) / 2;
        const BiPoly w = run(half, e, v, std::min(2 * qdeg_y, m - 1), depth + 1);

        if (trace) {
            LevelRecord& r = trace->levels[depth];
            r.lifted_shape = w.shape_bidegree();
            r.lifted_scanned = w.scanned_bidegree();
        }

        const BiPoly b = bipoly_mul(substitute_x_squared(w), negate_x(q, mod), mod);
        const BiPoly sliced = slice_y(b, d - e, m - e);
        return sliced.resized(std::min(sliced.nx(), n), sliced.ny());
    }
};

}  // namespace

BiPoly comp_rec(const CompState& s, const PrimeModulus& mod, GraeffeTrace* trace) {
    if (s.n == 0 || s.m == 0) throw Error(ErrorKind::BadDimensions, "n and m must be positive");
    if (s.d > s.m) throw Error(ErrorKind::BadDimensions, "slice start d exceeds m");
    if (s.numerator.len() > s.m) {
        throw Error(ErrorKind::BadDimensions, "numerator longer than m");
    }
    if (s.denominator(0, 0).value != 1) {
        throw Error(ErrorKind::BadConstantTerm, "[x^0 y^0] Q must be 1");
    }
    const auto qdeg = s.denominator.scanned_bidegree().y;
    if (s.qdeg_y > s.m - 1 || (qdeg && *qdeg > s.qdeg_y)) {
        throw Error(ErrorKind::BadDimensions,
                    "qdeg_y = " + std::to_string(s.qdeg_y) + " does not bound deg_y Q");
    }
    if (trace) {
        trace->n = s.n;
        trace->m = s.m;
        trace->levels.clear();
    }
    const BiPoly q = truncate_xy(s.denominator, s.n, s.m);
    if (s.d == s.m) return BiPoly(std::min(q.nx(), s.n), 1);
    Recursion rec{s.numerator, s.m, mod, trace};
    return rec.run(s.n, s.d, q, s.qdeg_y, 0);
}

UniPoly compose_series(const UniPoly& f, const UniPoly& g, std::size_t n, const PrimeModulus& mod,
                       GraeffeTrace* trace) {
    if (n == 0) throw Error(ErrorKind::BadDimensions, "composition order n must be positive");
    const std::size_t m = std::max<std::size_t>(f.len(), 1);

    CompState s;
    s.n = n;
    s.d = m - 1;
    s.m = m;
    s.numerator = reverse(f, m);  // y^(m-1) f(1/y)

    // Q = 1 - y g(x) mod x^n mod y^m
    const std::size_t g_len = std::min(g.len(), n);
    s.denominator = BiPoly(std::max<std::size_t>(g_len, 1), std::min<std::size_t>(2, m));
    s.denominator(0, 0) = FieldElem{1};
    if (m > 1) {
        for (std::size_t i = 0; i < g_len; ++i) s.denominator(i, 1) = field_neg(g[i], mod);
    }
    s.qdeg_y = std::min<std::size_t>(1, m - 1);

    const BiPoly result = comp_rec(s, mod, trace);
    UniPoly out = UniPoly::zeros(n);
    for (std::size_t i = 0; i < std::min(n, result.nx()); ++i) out[i] = result(i, 0);
    return out;
}

}  // namespace psc
