#include "psc/field.hpp"

#include <numeric>
#include <string>

#include "psc/detail/ntt.hpp"

namespace psc {

static_assert(nt::is_prime(kDefaultPrime));
static_assert(nt::two_adicity(kDefaultPrime) == 23);
static_assert(nt::is_primitive_root(3, kDefaultPrime));
static_assert(nt::smallest_primitive_root(kDefaultPrime) == 3);
static_assert(nt::is_prime(kCrtPrimes[0]) && nt::two_adicity(kCrtPrimes[0]) == 46);
static_assert(nt::is_prime(kCrtPrimes[1]) && nt::two_adicity(kCrtPrimes[1]) == 47);
static_assert(nt::is_prime(kCrtPrimes[2]) && nt::two_adicity(kCrtPrimes[2]) == 50);

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::BadConstantTerm: return "BadConstantTerm";
        case ErrorKind::BadDimensions: return "BadDimensions";
    }
    return "Unknown";
}

namespace {

u64 checked_modulus(u64 p) {
    if (p <= 2 || p >= kModulusLimit || (p & 1) == 0 || !nt::is_prime(p)) {
        throw Error(ErrorKind::InvalidModulus,
                    "modulus " + std::to_string(p) + " is not an odd prime below 2^62");
    }
    return p;
}

// Inverse of a modulo m for gcd(a, m) = 1, by the extended Euclidean algorithm.
std::optional<u64> inverse_mod(u64 a, u64 m) {
    using i128 = __int128;
    i128 old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        if (m == 1) return 0;
        return std::nullopt;
    }
    i128 x = old_s % static_cast<i128>(m);
    if (x < 0) x += m;
    return static_cast<u64>(x);
}

}  // namespace

PrimeModulus::PrimeModulus(u64 p)
    : p_(checked_modulus(p)),
      two_adicity_(nt::two_adicity(p)),
      primitive_root_(two_adicity_ >= kMinNttTwoAdicity
                          ? std::optional<u64>(nt::smallest_primitive_root(p))
                          : std::nullopt),
      mont_(p),
      roots_(std::make_shared<detail::RootCache>(p, primitive_root_, two_adicity_)) {}

FieldElem field_add(FieldElem a, FieldElem b, const PrimeModulus& m) noexcept {
    const u64 s = a.value + b.value;
    return FieldElem{s >= m.value() ? s - m.value() : s};
}

FieldElem field_sub(FieldElem a, FieldElem b, const PrimeModulus& m) noexcept {
    return FieldElem{a.value >= b.value ? a.value - b.value : a.value + m.value() - b.value};
}

FieldElem field_neg(FieldElem a, const PrimeModulus& m) noexcept {
    return FieldElem{a.value == 0 ? 0 : m.value() - a.value};
}

FieldElem field_mul(FieldElem a, FieldElem b, const PrimeModulus& m) noexcept {
    return FieldElem{nt::mul_mod(a.value, b.value, m.value())};
}

FieldElem mod_pow(FieldElem a, u64 e, const PrimeModulus& m) noexcept {
    return FieldElem{nt::pow_mod(a.value, e, m.value())};
}

FieldElem mod_inv(FieldElem a, const PrimeModulus& m) {
    if (a.value == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
    return mod_pow(a, m.value() - 2, m);
}

Crt3::Crt3(u64 m0, u64 m1, u64 m2) : moduli_{m0, m1, m2} {
    if (m0 < 2 || m1 < 2 || m2 < 2 || m0 >= kModulusLimit || m1 >= kModulusLimit ||
        m2 >= kModulusLimit) {
        throw Error(ErrorKind::InvalidModulus, "CRT moduli must lie in [2, 2^62)");
    }
    const auto a = inverse_mod(m0 % m1, m1);
    const u64 m01_mod_m2 = nt::mul_mod(m0 % m2, m1 % m2, m2);
    const auto b = inverse_mod(m01_mod_m2, m2);
    if (!a || !b) throw Error(ErrorKind::InvalidModulus, "CRT moduli are not pairwise coprime");
    inv_m0_mod_m1_ = *a;
    inv_m01_mod_m2_ = *b;
    m0_mod_m2_ = m0 % m2;
}

MixedRadix Crt3::recombine(u64 r0, u64 r1, u64 r2) const noexcept {
    const auto [m0, m1, m2] = moduli_;
    MixedRadix x;
    x.d0 = r0 % m0;
    // d1 = (r1 - d0) / m0 mod m1
    const u64 d0_mod_m1 = x.d0 % m1;
    const u64 r1m = r1 % m1;
    x.d1 = nt::mul_mod(r1m >= d0_mod_m1 ? r1m - d0_mod_m1 : r1m + m1 - d0_mod_m1,
                       inv_m0_mod_m1_, m1);
    // d2 = (r2 - d0 - d1*m0) / (m0*m1) mod m2
    const u64 partial = (x.d0 % m2 + nt::mul_mod(x.d1 % m2, m0_mod_m2_, m2)) % m2;
    const u64 r2m = r2 % m2;
    x.d2 = nt::mul_mod(r2m >= partial ? r2m - partial : r2m + m2 - partial, inv_m01_mod_m2_, m2);
    return x;
}

std::optional<u128> Crt3::to_u128(const MixedRadix& x) const noexcept {
    const u128 m0 = moduli_[0];
    const u128 m01 = m0 * moduli_[1];  // < 2^124
    u128 high = 0;
    if (x.d2 != 0) {
        if (m01 > ~u128{0} / x.d2) return std::nullopt;
        high = m01 * x.d2;
    }
    const u128 mid = m0 * x.d1;
    const u128 low = mid + x.d0;
    if (low < mid) return std::nullopt;
    const u128 sum = high + low;
    if (sum < high) return std::nullopt;
    return sum;
}

Crt3::Reducer Crt3::reducer(const PrimeModulus& target) const noexcept {
    Reducer r;
    r.p_ = target.value();
    r.m0_mod_p_ = moduli_[0] % r.p_;
    r.m01_mod_p_ = nt::mul_mod(r.m0_mod_p_, moduli_[1] % r.p_, r.p_);
    return r;
}

FieldElem Crt3::Reducer::operator()(const MixedRadix& x) const noexcept {
    const u128 acc = static_cast<u128>(x.d0 % p_) + static_cast<u128>(x.d1 % p_) * m0_mod_p_ +
                     static_cast<u128>(x.d2 % p_) * m01_mod_p_;
    return FieldElem{static_cast<u64>(acc % p_)};
}

bool Crt3::can_hold(u128 bound, u64 count) const noexcept {
    // Need count * bound < m0*m1*m2. With q = ceil(bound / (m0*m1)) it
    // suffices that count * q < m2.
    const u128 m01 = static_cast<u128>(moduli_[0]) * moduli_[1];
    const u128 q = bound / m01 + (bound % m01 != 0 ? 1 : 0);
    if (q == 0) return true;
    return static_cast<u128>(count) * q < moduli_[2];
}

const Crt3& crt_primes() {
    static const Crt3 crt(kCrtPrimes[0], kCrtPrimes[1], kCrtPrimes[2]);
    return crt;
}

const std::array<PrimeModulus, 3>& crt_prime_fields() {
    static const std::array<PrimeModulus, 3> fields = {
        PrimeModulus(kCrtPrimes[0]), PrimeModulus(kCrtPrimes[1]), PrimeModulus(kCrtPrimes[2])};
    return fields;
}

}  // namespace psc
