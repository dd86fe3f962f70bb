#include "psc/reference.hpp"

#include <algorithm>
#include <string>

#include "psc/compose.hpp"

namespace psc::reference {

namespace {

// a * b mod x^n using only field operations.
std::vector<FieldElem> mul_trunc_naive(std::span<const FieldElem> a, std::span<const FieldElem> b,
                                       std::size_t n, const PrimeModulus& mod) {
    std::vector<FieldElem> out(n);
    for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
        if (a[i].value == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
            out[i + j] = field_add(out[i + j], field_mul(a[i], b[j], mod), mod);
        }
    }
    return out;
}

std::vector<FieldElem> mul_trunc(std::span<const FieldElem> a, std::span<const FieldElem> b,
                                 std::size_t n, const PrimeModulus& mod, Multiplication mul) {
    if (mul == Multiplication::Schoolbook) return mul_trunc_naive(a, b, n, mod);
    const UniPoly pa(std::vector<FieldElem>(a.begin(), a.end()));
    const UniPoly pb(std::vector<FieldElem>(b.begin(), b.end()));
    return truncate(poly_mul(pa, pb, mod), n).release();
}

}  // namespace

UniPoly compose_horner(const UniPoly& f, const UniPoly& g, std::size_t n, const PrimeModulus& mod,
                       Multiplication mul) {
    if (n == 0) throw Error(ErrorKind::BadDimensions, "composition order n must be positive");
    const std::size_t g_len = std::min(g.len(), n);
    const std::span<const FieldElem> gs = g.coeffs().first(g_len);
    std::vector<FieldElem> acc(n);
    for (std::size_t i = f.len(); i-- > 0;) {
        acc = mul_trunc(acc, gs, n, mod, mul);
        acc[0] = field_add(acc[0], f[i], mod);
    }
    return UniPoly(std::move(acc));
}

UniPoly powproj_naive(const LinearForm& w, const UniPoly& g, std::size_t n, std::size_t m,
                      const PrimeModulus& mod, Multiplication mul) {
    if (n == 0 || m == 0) throw Error(ErrorKind::BadDimensions, "n and m must be positive");
    if (w.size() != n || g.len() > n) {
        throw Error(ErrorKind::BadDimensions, "linear form or g does not match n = " +
                                                  std::to_string(n));
    }
    std::vector<FieldElem> power(n);
    power[0] = FieldElem{1};
    UniPoly out = UniPoly::zeros(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = inner_product(w.weights(), power, mod);
        if (i + 1 < m) power = mul_trunc(power, g.coeffs(), n, mod, mul);
    }
    return out;
}

FieldElem inner_product(std::span<const FieldElem> a, std::span<const FieldElem> b,
                        const PrimeModulus& mod) {
    FieldElem acc{};
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        acc = field_add(acc, field_mul(a[i], b[i], mod), mod);
    }
    return acc;
}

bool duality_holds(const UniPoly& f, const LinearForm& w, const UniPoly& composed,
                   const UniPoly& projected, const PrimeModulus& mod) {
    return inner_product(w.weights(), composed.coeffs(), mod) ==
           inner_product(f.coeffs(), projected.coeffs(), mod);
}

bool duality_check(const UniPoly& f, const UniPoly& g, const LinearForm& w, std::size_t n,
                   std::size_t m, const PrimeModulus& mod, Route compose_route,
                   Route projection_route) {
    if (f.len() > m) throw Error(ErrorKind::BadDimensions, "f longer than m");
    const UniPoly padded_f = truncate(f, m);
    const UniPoly composed = compose_route == Route::Fast ? compose_series(padded_f, g, n, mod)
                                                          : compose_horner(padded_f, g, n, mod);
    const UniPoly projected = projection_route == Route::Fast
                                  ? power_projection(w, g, n, m, mod)
                                  : powproj_naive(w, g, n, m, mod);
    return duality_holds(padded_f, w, composed, projected, mod);
}

}  // namespace psc::reference
