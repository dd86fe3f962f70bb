#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "psc/field.hpp"

namespace psc::detail {

/// Montgomery arithmetic with R = 2^32 for p < 2^30.
class Montgomery32 {
public:
    static constexpr u64 kLimit = u64{1} << 30;

    constexpr explicit Montgomery32(u32 p) : p_(p), neg_inv_(0), r2_(0) {
        u32 inv = p;
        for (int i = 0; i < 4; ++i) inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        const u64 r = (u64{1} << 32) % p;
        r2_ = static_cast<u32>(r * r % p);
    }

    constexpr u32 modulus() const { return p_; }
    constexpr u32 reduce(u64 t) const {
        const u32 m = static_cast<u32>(t) * neg_inv_;
        const u32 r = static_cast<u32>((t + static_cast<u64>(m) * p_) >> 32);
        return r >= p_ ? r - p_ : r;
    }
    constexpr u32 mul(u32 a, u32 b) const { return reduce(static_cast<u64>(a) * b); }
    constexpr u32 add(u32 a, u32 b) const {
        const u32 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    constexpr u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    constexpr u32 to_mont(u32 x) const { return mul(x, r2_); }
    constexpr u32 from_mont(u32 x) const { return reduce(x); }

private:
    u32 p_;
    u32 neg_inv_;
    u32 r2_;
};

/// Twiddle factors in Montgomery form. For each power-of-two level len,
/// entries [len/2, len) hold w_len^j for j < len/2, where w_len is a
/// primitive len-th root of unity; `inverse` holds the inverse roots.
struct RootTable {
    int log_size = 0;
    std::vector<u64> forward;
    std::vector<u64> inverse;
    /// Same roots in 32-bit Montgomery form; filled only when p < 2^30.
    std::vector<u32> forward32;
    std::vector<u32> inverse32;
};

/// Grows monotonically; readers get an immutable snapshot.
class RootCache {
public:
    RootCache(u64 p, std::optional<u64> primitive_root, int two_adicity);

    /// Throws Error{UnsupportedSize} if 2^log_size does not divide p - 1 or
    /// the field has no primitive root.
    std::shared_ptr<const RootTable> table(int log_size) const;

private:
    Montgomery64 mont_;
    std::optional<u64> primitive_root_;
    int two_adicity_;
    mutable std::mutex mutex_;
    mutable std::shared_ptr<const RootTable> table_;
};

/// In-place decimation-in-frequency transform: natural order in,
/// bit-reversed order out. Values are in Montgomery form.
void ntt_dif(std::span<u64> a, const RootTable& roots, const Montgomery64& mont);

/// Inverse of ntt_dif including the 1/size scaling: bit-reversed in,
/// natural order out.
void ntt_dit_inverse(std::span<u64> a, const RootTable& roots, const Montgomery64& mont);

/// Exact cyclic-free product of canonical residue vectors via one NTT in
/// `field`. The caller guarantees field.supports_ntt for the padded size.
std::vector<u64> ntt_convolve(std::span<const u64> a, std::span<const u64> b,
                              const PrimeModulus& field);

int ceil_log2(std::size_t n);

}  // namespace psc::detail
