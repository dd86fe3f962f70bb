#include "psc/unipoly.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "psc/detail/ntt.hpp"

namespace psc {

UniPoly::UniPoly(std::initializer_list<u64> values, const PrimeModulus& m) {
    coeffs_.reserve(values.size());
    for (u64 v : values) coeffs_.push_back(m.elem(v));
}

UniPoly UniPoly::from_values(std::span<const u64> values, const PrimeModulus& m) {
    std::vector<FieldElem> c;
    c.reserve(values.size());
    for (u64 v : values) c.push_back(m.elem(v));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::one(std::size_t len) {
    UniPoly f = zeros(std::max<std::size_t>(len, 1));
    f[0] = FieldElem{1};
    return f;
}

std::optional<std::size_t> UniPoly::degree() const noexcept {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].value != 0) return i;
    }
    return std::nullopt;
}

std::vector<u64> to_values(const UniPoly& f) {
    std::vector<u64> out(f.len());
    for (std::size_t i = 0; i < f.len(); ++i) out[i] = f[i].value;
    return out;
}

std::vector<FieldElem> ntt_forward(const UniPoly& a, const PrimeModulus& m) {
    const std::size_t s = a.len();
    if (s == 0 || !std::has_single_bit(s)) {
        throw Error(ErrorKind::UnsupportedSize,
                    "NTT length " + std::to_string(s) + " is not a power of two");
    }
    const auto roots = m.roots().table(detail::ceil_log2(s));
    const Montgomery64& mont = m.montgomery();
    std::vector<u64> buf(s);
    for (std::size_t i = 0; i < s; ++i) buf[i] = mont.to_mont(a[i].value);
    detail::ntt_dif(buf, *roots, mont);
    std::vector<FieldElem> out(s);
    for (std::size_t i = 0; i < s; ++i) out[i] = FieldElem{mont.from_mont(buf[i])};
    return out;
}

UniPoly ntt_inverse(std::span<const FieldElem> values, const PrimeModulus& m) {
    const std::size_t s = values.size();
    if (s == 0 || !std::has_single_bit(s)) {
        throw Error(ErrorKind::UnsupportedSize,
                    "NTT length " + std::to_string(s) + " is not a power of two");
    }
    const auto roots = m.roots().table(detail::ceil_log2(s));
    const Montgomery64& mont = m.montgomery();
    std::vector<u64> buf(s);
    for (std::size_t i = 0; i < s; ++i) buf[i] = mont.to_mont(values[i].value);
    detail::ntt_dit_inverse(buf, *roots, mont);
    std::vector<FieldElem> out(s);
    for (std::size_t i = 0; i < s; ++i) out[i] = FieldElem{mont.from_mont(buf[i])};
    return UniPoly(std::move(out));
}

UniPoly poly_mul_schoolbook(const UniPoly& a, const UniPoly& b, const PrimeModulus& m) {
    if (a.empty() || b.empty()) return {};
    const u64 p = m.value();
    const std::size_t la = a.len(), lb = b.len();
    std::vector<FieldElem> out(la + lb - 1);
    // Products are below 2^124, so eight of them can be summed in a u128.
    for (std::size_t k = 0; k < out.size(); ++k) {
        const std::size_t lo = k >= lb ? k - lb + 1 : 0;
        const std::size_t hi = std::min(k, la - 1);
        u128 acc = 0;
        int pending = 0;
        for (std::size_t i = lo; i <= hi; ++i) {
            acc += static_cast<u128>(a[i].value) * b[k - i].value;
            if (++pending == 8) {
                acc %= p;
                pending = 0;
            }
        }
        out[k] = FieldElem{static_cast<u64>(acc % p)};
    }
    return UniPoly(std::move(out));
}

namespace {

std::vector<u64> raw_values(const UniPoly& f, u64 modulus) {
    std::vector<u64> out(f.len());
    for (std::size_t i = 0; i < f.len(); ++i) out[i] = f[i].value % modulus;
    return out;
}

}  // namespace

UniPoly poly_mul_crt(const UniPoly& a, const UniPoly& b, const PrimeModulus& m) {
    if (a.empty() || b.empty()) return {};
    const Crt3& crt = crt_primes();
    const u128 max_term = static_cast<u128>(m.value() - 1) * (m.value() - 1);
    if (!crt.can_hold(max_term, std::min(a.len(), b.len()))) {
        throw Error(ErrorKind::UnsupportedSize,
                    "product of length " + std::to_string(a.len() + b.len() - 1) +
                        " exceeds the CRT range for modulus " + std::to_string(m.value()));
    }
    const auto& fields = crt_prime_fields();
    std::array<std::vector<u64>, 3> residues;
    for (std::size_t t = 0; t < 3; ++t) {
        const u64 q = fields[t].value();
        const auto ra = raw_values(a, q);
        residues[t] = &a == &b ? detail::ntt_convolve(ra, ra, fields[t])
                               : detail::ntt_convolve(ra, raw_values(b, q), fields[t]);
    }
    const auto reduce = crt.reducer(m);
    std::vector<FieldElem> out(residues[0].size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = reduce(crt.recombine(residues[0][i], residues[1][i], residues[2][i]));
    }
    return UniPoly(std::move(out));
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b, const PrimeModulus& m) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.len(), b.len()) <= kSchoolbookThreshold) return poly_mul_schoolbook(a, b, m);
    const int log_size = detail::ceil_log2(a.len() + b.len() - 1);
    if (!m.supports_ntt(log_size)) return poly_mul_crt(a, b, m);

    const auto ra = raw_values(a, m.value());
    auto product = &a == &b ? detail::ntt_convolve(ra, ra, m)
                            : detail::ntt_convolve(ra, raw_values(b, m.value()), m);
    std::vector<FieldElem> out(product.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = FieldElem{product[i]};
    return UniPoly(std::move(out));
}

UniPoly truncate(const UniPoly& f, std::size_t n) {
    std::vector<FieldElem> out(n);
    std::copy_n(f.coeffs().begin(), std::min(n, f.len()), out.begin());
    return UniPoly(std::move(out));
}

UniPoly reverse(const UniPoly& f, std::size_t len) {
    if (f.len() > len) {
        throw Error(ErrorKind::BadDimensions, "reverse: length " + std::to_string(f.len()) +
                                                  " exceeds target " + std::to_string(len));
    }
    std::vector<FieldElem> out(len);
    for (std::size_t i = 0; i < f.len(); ++i) out[len - 1 - i] = f[i];
    return UniPoly(std::move(out));
}

UniPoly poly_recip(const UniPoly& f, std::size_t n, const PrimeModulus& m) {
    if (f.empty() || f[0].value != 1) {
        throw Error(ErrorKind::BadConstantTerm, "reciprocal requires f(0) = 1");
    }
    if (n == 0) throw Error(ErrorKind::BadDimensions, "reciprocal precision must be positive");

    // n, ceil(n/2), ..., 1
    std::vector<std::size_t> schedule;
    for (std::size_t k = n; k > 1; k = (k + 1) / 2) schedule.push_back(k);

    UniPoly g = UniPoly::one(1);
    for (auto it = schedule.rbegin(); it != schedule.rend(); ++it) {
        const std::size_t k = *it;
        UniPoly err = truncate(poly_mul(truncate(f, std::min(k, f.len())), g, m), k);
        // err <- 2 - f*g
        for (auto& c : err.coeffs()) c = field_neg(c, m);
        err[0] = field_add(err[0], FieldElem{2 % m.value()}, m);
        g = truncate(poly_mul(g, err, m), k);
    }
    return truncate(g, n);
}

}  // namespace psc
