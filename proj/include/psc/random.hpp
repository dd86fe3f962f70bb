#pragma once

#include <cstddef>

#include "psc/field.hpp"
#include "psc/unipoly.hpp"

namespace psc {

/// SplitMix64. The state advances by 0x9E3779B97F4A7C15 per draw and the
/// output is mixed with
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^ (z >> 31).
/// Field elements are next() % p. Everything seeded from this generator is
/// reproducible across implementations that follow the same recipe.
class SplitMix64 {
public:
    explicit SplitMix64(u64 seed) noexcept : state_(seed) {}

    u64 next() noexcept {
        u64 z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi] as lo + next() % (hi - lo + 1).
    std::size_t uniform(std::size_t lo, std::size_t hi) noexcept {
        return lo + static_cast<std::size_t>(next() % (hi - lo + 1));
    }

    FieldElem element(const PrimeModulus& m) noexcept { return FieldElem{next() % m.value()}; }

    UniPoly poly(std::size_t len, const PrimeModulus& m) {
        UniPoly f = UniPoly::zeros(len);
        for (auto& c : f.coeffs()) c = element(m);
        return f;
    }

private:
    u64 state_;
};

}  // namespace psc
