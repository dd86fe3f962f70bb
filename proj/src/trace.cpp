#include "psc/trace.hpp"

#include <algorithm>
#include <sstream>

namespace psc {

namespace {

std::size_t ceil_shift(std::size_t n, std::size_t k) {
    if (k >= 63) return n == 0 ? 0 : 1;
    const std::size_t d = std::size_t{1} << k;
    return (n + d - 1) / d;
}

std::size_t capped_pow2(std::size_t k, std::size_t cap) {
    if (k >= 63) return cap;
    return std::min(std::size_t{1} << k, cap);
}

bool within(const Bidegree& d, std::size_t x_bound, std::size_t y_bound) {
    return (!d.x || *d.x <= x_bound) && (!d.y || *d.y <= y_bound);
}

std::string show(const Bidegree& d) {
    std::ostringstream os;
    os << '(';
    if (d.x) os << *d.x; else os << "-inf";
    os << ", ";
    if (d.y) os << *d.y; else os << "-inf";
    os << ')';
    return os.str();
}

}  // namespace

std::optional<std::string> find_bidegree_violation(const GraeffeTrace& trace) {
    const std::size_t y_cap = trace.m == 0 ? 0 : trace.m - 1;
    for (const LevelRecord& r : trace.levels) {
        const std::size_t k = r.level;
        const std::size_t x_bound = ceil_shift(trace.n, k) - 1;
        const std::size_t y_bound = capped_pow2(k, y_cap);
        auto fail = [&](const char* what, const Bidegree& d, std::size_t xb, std::size_t yb) {
            std::ostringstream os;
            os << "level " << k << ": " << what << ' ' << show(d) << " exceeds (" << xb << ", "
               << yb << ')';
            return os.str();
        };
        if (r.n != ceil_shift(trace.n, k)) {
            std::ostringstream os;
            os << "level " << k << ": x-order " << r.n << " != ceil(" << trace.n << " / 2^" << k << ')';
            return os.str();
        }
        for (const auto* d : {&r.denominator_shape, &r.denominator_scanned}) {
            if (!within(*d, x_bound, y_bound)) return fail("bideg Q", *d, x_bound, y_bound);
        }
        for (const auto& d : {r.numerator_shape, r.numerator_scanned}) {
            if (d && !within(*d, x_bound, y_bound)) return fail("bideg P", *d, x_bound, y_bound);
        }
        const std::size_t wx = ceil_shift(trace.n, k + 1) - 1;
        const std::size_t wy = capped_pow2(k + 1, y_cap);
        for (const auto& d : {r.lifted_shape, r.lifted_scanned}) {
            if (d && !within(*d, wx, wy)) return fail("bideg W", *d, wx, wy);
        }
        if (r.tracked_qdeg_y) {
            if (r.denominator_scanned.y && *r.denominator_scanned.y > *r.tracked_qdeg_y) {
                std::ostringstream os;
                os << "level " << k << ": scanned deg_y Q " << *r.denominator_scanned.y
                   << " exceeds tracked " << *r.tracked_qdeg_y;
                return os.str();
            }
            if (*r.tracked_qdeg_y > y_bound) {
                std::ostringstream os;
                os << "level " << k << ": tracked deg_y Q " << *r.tracked_qdeg_y << " exceeds "
                   << y_bound;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace psc
