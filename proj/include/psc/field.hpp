#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>

#include "psc/error.hpp"

#if !defined(__SIZEOF_INT128__)
#error "psc requires unsigned __int128 (GCC/Clang)"
#endif

namespace psc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Exclusive upper bound on supported moduli.
inline constexpr u64 kModulusLimit = u64{1} << 62;

/// 119 * 2^23 + 1, primitive root 3.
inline constexpr u64 kDefaultPrime = 998244353;

namespace nt {

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 result = 1 % m;
    a %= m;
    for (; e != 0; e >>= 1) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
    }
    return result;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
constexpr bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        u64 a = base % n;
        if (a == 0) continue;
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

constexpr int two_adicity(u64 p) {
    return p < 2 ? 0 : __builtin_ctzll(p - 1);
}

/// Distinct prime factors of p - 1 by trial division of its odd part.
/// Only meant for p whose odd cofactor is small enough to trial-divide.
struct Factors {
    std::array<u64, 16> primes{};
    int count = 0;
};

constexpr Factors factor_group_order(u64 p) {
    Factors out;
    u64 c = p - 1;
    if ((c & 1) == 0) {
        out.primes[out.count++] = 2;
        while ((c & 1) == 0) c >>= 1;
    }
    for (u64 q = 3; q * q <= c; q += 2) {
        if (c % q == 0) {
            out.primes[out.count++] = q;
            while (c % q == 0) c /= q;
        }
    }
    if (c > 1) out.primes[out.count++] = c;
    return out;
}

constexpr bool is_primitive_root(u64 g, u64 p) {
    if (g % p == 0) return false;
    const Factors f = factor_group_order(p);
    for (int i = 0; i < f.count; ++i) {
        if (pow_mod(g, (p - 1) / f.primes[i], p) == 1) return false;
    }
    return true;
}

constexpr u64 smallest_primitive_root(u64 p) {
    const Factors f = factor_group_order(p);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (int i = 0; i < f.count && ok; ++i) {
            ok = pow_mod(g, (p - 1) / f.primes[i], p) != 1;
        }
        if (ok) return g;
    }
}

}  // namespace nt

/// Montgomery form with R = 2^64 for odd moduli below 2^62. Values are kept
/// strictly reduced in [0, p).
class Montgomery64 {
public:
    constexpr explicit Montgomery64(u64 p) : p_(p), neg_inv_(0), r2_(0) {
        u64 inv = p;  // correct to 3 bits for odd p
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        const u128 r = (static_cast<u128>(1) << 64) % p;
        r2_ = static_cast<u64>(r * r % p);
    }

    constexpr u64 modulus() const { return p_; }

    constexpr u64 reduce(u128 t) const {
        const u64 m = static_cast<u64>(t) * neg_inv_;
        const u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }
    constexpr u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
    constexpr u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    constexpr u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    constexpr u64 to_mont(u64 x) const { return mul(x, r2_); }
    constexpr u64 from_mont(u64 x) const { return reduce(x); }

private:
    u64 p_;
    u64 neg_inv_;
    u64 r2_;
};

struct FieldElem {
    u64 value = 0;

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElem a) { return os << a.value; }

namespace detail {
class RootCache;
}

/// An odd prime p < 2^62 together with its NTT data. Copies share the
/// lazily grown root-of-unity tables.
class PrimeModulus {
public:
    /// Throws Error{InvalidModulus} unless p is an odd prime below 2^62.
    explicit PrimeModulus(u64 p = kDefaultPrime);

    u64 value() const noexcept { return p_; }
    int two_adicity() const noexcept { return two_adicity_; }
    /// Present when the 2-power subgroup is large enough to run NTTs in.
    std::optional<u64> primitive_root() const noexcept { return primitive_root_; }
    const Montgomery64& montgomery() const noexcept { return mont_; }

    /// True when an NTT of size 2^log_size can run directly in this field.
    bool supports_ntt(int log_size) const noexcept {
        return primitive_root_.has_value() && log_size <= two_adicity_;
    }

    /// Reduces an arbitrary integer into canonical form.
    FieldElem elem(u64 x) const noexcept { return FieldElem{x % p_}; }
    bool is_canonical(FieldElem a) const noexcept { return a.value < p_; }

    const detail::RootCache& roots() const { return *roots_; }

    friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    u64 p_;
    int two_adicity_;
    std::optional<u64> primitive_root_;
    Montgomery64 mont_;
    std::shared_ptr<detail::RootCache> roots_;
};

/// Smallest two-adicity for which a primitive root is computed. Below it the
/// multiplication path always goes through the CRT primes.
inline constexpr int kMinNttTwoAdicity = 16;

FieldElem field_add(FieldElem a, FieldElem b, const PrimeModulus& m) noexcept;
FieldElem field_sub(FieldElem a, FieldElem b, const PrimeModulus& m) noexcept;
FieldElem field_neg(FieldElem a, const PrimeModulus& m) noexcept;
FieldElem field_mul(FieldElem a, FieldElem b, const PrimeModulus& m) noexcept;
FieldElem mod_pow(FieldElem a, u64 e, const PrimeModulus& m) noexcept;
/// Throws Error{ZeroInverse} for a = 0.
FieldElem mod_inv(FieldElem a, const PrimeModulus& m);

/// Value of a CRT recombination as mixed-radix digits:
/// value = d0 + d1 * m0 + d2 * m0 * m1, with d_i < m_i.
struct MixedRadix {
    u64 d0 = 0;
    u64 d1 = 0;
    u64 d2 = 0;
};

/// Garner recombination for three pairwise coprime moduli below 2^62.
class Crt3 {
public:
    /// Throws Error{InvalidModulus} if the moduli are not pairwise coprime.
    Crt3(u64 m0, u64 m1, u64 m2);

    const std::array<u64, 3>& moduli() const noexcept { return moduli_; }

    /// Unique integer in [0, m0*m1*m2) congruent to each residue.
    MixedRadix recombine(u64 r0, u64 r1, u64 r2) const noexcept;

    /// The recombined integer if it fits in 128 bits.
    std::optional<u128> to_u128(const MixedRadix& x) const noexcept;

    /// Reduction of recombined integers into a target field.
    class Reducer {
    public:
        FieldElem operator()(const MixedRadix& x) const noexcept;

    private:
        friend class Crt3;
        u64 p_ = 0;
        u64 m0_mod_p_ = 0;
        u64 m01_mod_p_ = 0;
    };
    Reducer reducer(const PrimeModulus& target) const noexcept;

    /// floor((m0*m1*m2 - 1) / bound) >= count, i.e. count products each at
    /// most bound fit below the modulus product. bound must fit in 128 bits.
    bool can_hold(u128 bound, u64 count) const noexcept;

private:
    std::array<u64, 3> moduli_;
    u64 inv_m0_mod_m1_;
    u64 inv_m01_mod_m2_;
    u64 m0_mod_m2_;
};

/// Three NTT-friendly primes just below 2^62 used to lift products for
/// moduli that cannot run an NTT of the needed size.
inline constexpr std::array<u64, 3> kCrtPrimes = {
    4611615649683210241ull,  // 65535 * 2^46 + 1
    4605071356474687489ull,  // 32721 * 2^47 + 1
    4601552919265804289ull,  // 4087 * 2^50 + 1
};

const Crt3& crt_primes();
/// PrimeModulus objects for kCrtPrimes, sharing process-wide root caches.
const std::array<PrimeModulus, 3>& crt_prime_fields();

}  // namespace psc
