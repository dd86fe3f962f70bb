#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "psc/field.hpp"

namespace psc {

/// Dense univariate polynomial with ascending coefficients. The length is
/// part of the value: leading zeros are kept and never trimmed implicitly.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) {}

    /// Builds from raw integers, reducing each modulo m.
    UniPoly(std::initializer_list<u64> values, const PrimeModulus& m);
    static UniPoly from_values(std::span<const u64> values, const PrimeModulus& m);

    static UniPoly zeros(std::size_t len) { return UniPoly(std::vector<FieldElem>(len)); }
    static UniPoly one(std::size_t len = 1);

    std::size_t len() const noexcept { return coeffs_.size(); }
    bool empty() const noexcept { return coeffs_.empty(); }

    /// Largest index with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    bool is_zero() const noexcept { return !degree().has_value(); }

    FieldElem operator[](std::size_t i) const { return coeffs_[i]; }
    FieldElem& operator[](std::size_t i) { return coeffs_[i]; }
    /// Coefficient i, or zero past the end.
    FieldElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElem{}; }

    std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
    std::span<FieldElem> coeffs() noexcept { return coeffs_; }
    std::vector<FieldElem> release() && { return std::move(coeffs_); }

    void resize(std::size_t len) { coeffs_.resize(len); }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<FieldElem> coeffs_;
};

std::vector<u64> to_values(const UniPoly& f);

/// Products with min(len_a, len_b) at or below this go to schoolbook.
inline constexpr std::size_t kSchoolbookThreshold = 32;

/// Forward NTT of a power-of-two length polynomial. The output is in
/// bit-reversed order; ntt_inverse undoes it including the 1/s scaling.
/// Throws Error{UnsupportedSize} if the length is not a power of two or
/// exceeds what the field supports.
std::vector<FieldElem> ntt_forward(const UniPoly& a, const PrimeModulus& m);
UniPoly ntt_inverse(std::span<const FieldElem> values, const PrimeModulus& m);

/// Exact product, len = a.len + b.len - 1 (0 if either is empty).
UniPoly poly_mul(const UniPoly& a, const UniPoly& b, const PrimeModulus& m);
UniPoly poly_mul_schoolbook(const UniPoly& a, const UniPoly& b, const PrimeModulus& m);

/// Product routed through the three CRT primes regardless of m.
UniPoly poly_mul_crt(const UniPoly& a, const UniPoly& b, const PrimeModulus& m);

/// f^{-1} mod x^n by Newton iteration. Requires f(0) = 1.
UniPoly poly_recip(const UniPoly& f, std::size_t n, const PrimeModulus& m);

/// Coefficients 0..n-1, zero-padded to length n.
UniPoly truncate(const UniPoly& f, std::size_t n);

/// x^{len-1} f(1/x) for f zero-padded to len. Requires f.len() <= len.
UniPoly reverse(const UniPoly& f, std::size_t len);

}  // namespace psc
