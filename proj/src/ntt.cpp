#include "psc/detail/ntt.hpp"

#include <bit>
#include <string>

namespace psc::detail {

int ceil_log2(std::size_t n) {
    return n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
}

RootCache::RootCache(u64 p, std::optional<u64> primitive_root, int two_adicity)
    : mont_(p), primitive_root_(primitive_root), two_adicity_(two_adicity) {}

std::shared_ptr<const RootTable> RootCache::table(int log_size) const {
    if (!primitive_root_ || log_size > two_adicity_) {
        throw Error(ErrorKind::UnsupportedSize,
                    "NTT of size 2^" + std::to_string(log_size) + " unsupported modulo " +
                        std::to_string(mont_.modulus()));
    }
    std::lock_guard lock(mutex_);
    if (table_ && table_->log_size >= log_size) return table_;

    // Build at least 2^16 so small requests do not trigger repeated rebuilds.
    const int target = std::min(two_adicity_, std::max(log_size, 16));
    const std::size_t size = std::size_t{1} << target;
    const u64 p = mont_.modulus();
    auto t = std::make_shared<RootTable>();
    t->log_size = target;
    t->forward.assign(std::max<std::size_t>(size, 2), 0);
    t->inverse.assign(std::max<std::size_t>(size, 2), 0);
    for (int level = 1; level <= target; ++level) {
        const std::size_t half = std::size_t{1} << (level - 1);
        const u64 w = nt::pow_mod(*primitive_root_, (p - 1) >> level, p);
        const u64 w_inv = nt::pow_mod(w, p - 2, p);
        const u64 wm = mont_.to_mont(w), wm_inv = mont_.to_mont(w_inv);
        u64 cur = mont_.to_mont(1), cur_inv = cur;
        for (std::size_t j = 0; j < half; ++j) {
            t->forward[half + j] = cur;
            t->inverse[half + j] = cur_inv;
            cur = mont_.mul(cur, wm);
            cur_inv = mont_.mul(cur_inv, wm_inv);
        }
    }
    const u64 p_small = mont_.modulus();
    if (p_small < Montgomery32::kLimit) {
        const Montgomery32 m32(static_cast<u32>(p_small));
        t->forward32.resize(t->forward.size());
        t->inverse32.resize(t->inverse.size());
        for (std::size_t i = 0; i < t->forward.size(); ++i) {
            t->forward32[i] = m32.to_mont(static_cast<u32>(mont_.from_mont(t->forward[i])));
            t->inverse32[i] = m32.to_mont(static_cast<u32>(mont_.from_mont(t->inverse[i])));
        }
    }
    table_ = std::move(t);
    return table_;
}

namespace {

template <class Word, class Mont>
void dif(Word* a, std::size_t n, const Word* roots, const Mont& mont) {
    for (std::size_t len = n; len >= 2; len >>= 1) {
        const std::size_t half = len >> 1;
        const Word* w = roots + half;
        for (std::size_t i = 0; i < n; i += len) {
            Word* lo = a + i;
            Word* hi = lo + half;
            for (std::size_t j = 0; j < half; ++j) {
                const Word u = lo[j], v = hi[j];
                lo[j] = mont.add(u, v);
                hi[j] = mont.mul(mont.sub(u, v), w[j]);
            }
        }
    }
}

template <class Word, class Mont>
void dit_inverse(Word* a, std::size_t n, const Word* roots, const Mont& mont) {
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const Word* w = roots + half;
        for (std::size_t i = 0; i < n; i += len) {
            Word* lo = a + i;
            Word* hi = lo + half;
            for (std::size_t j = 0; j < half; ++j) {
                const Word u = lo[j], v = mont.mul(hi[j], w[j]);
                lo[j] = mont.add(u, v);
                hi[j] = mont.sub(u, v);
            }
        }
    }
    const u64 p = mont.modulus();
    const Word scale = mont.to_mont(static_cast<Word>(nt::pow_mod(n % p, p - 2, p)));
    for (std::size_t i = 0; i < n; ++i) a[i] = mont.mul(a[i], scale);
}

template <class Word, class Mont>
std::vector<u64> convolve(std::span<const u64> a, std::span<const u64> b, std::size_t size,
                          const Word* forward, const Word* inverse, const Mont& mont) {
    const bool square = a.data() == b.data() && a.size() == b.size();
    std::vector<Word> fa(size, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = mont.to_mont(static_cast<Word>(a[i]));
    dif(fa.data(), size, forward, mont);
    if (square) {
        for (std::size_t i = 0; i < size; ++i) fa[i] = mont.mul(fa[i], fa[i]);
    } else {
        std::vector<Word> fb(size, 0);
        for (std::size_t i = 0; i < b.size(); ++i) fb[i] = mont.to_mont(static_cast<Word>(b[i]));
        dif(fb.data(), size, forward, mont);
        for (std::size_t i = 0; i < size; ++i) fa[i] = mont.mul(fa[i], fb[i]);
    }
    dit_inverse(fa.data(), size, inverse, mont);
    const std::size_t out_len = a.size() + b.size() - 1;
    std::vector<u64> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = mont.from_mont(fa[i]);
    return out;
}

}  // namespace

void ntt_dif(std::span<u64> a, const RootTable& roots, const Montgomery64& mont) {
    dif(a.data(), a.size(), roots.forward.data(), mont);
}

void ntt_dit_inverse(std::span<u64> a, const RootTable& roots, const Montgomery64& mont) {
    dit_inverse(a.data(), a.size(), roots.inverse.data(), mont);
}

std::vector<u64> ntt_convolve(std::span<const u64> a, std::span<const u64> b,
                              const PrimeModulus& field) {
    if (a.empty() || b.empty()) return {};
    const int log_size = ceil_log2(a.size() + b.size() - 1);
    const std::size_t size = std::size_t{1} << log_size;
    const auto roots = field.roots().table(log_size);
    if (field.value() < Montgomery32::kLimit) {
        const Montgomery32 mont(static_cast<u32>(field.value()));
        return convolve(a, b, size, roots->forward32.data(), roots->inverse32.data(), mont);
    }
    return convolve(a, b, size, roots->forward.data(), roots->inverse.data(), field.montgomery());
}

}  // namespace psc::detail
