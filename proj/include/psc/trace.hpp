#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psc/bipoly.hpp"

namespace psc {

/// Snapshot of one Graeffe level. Level k sees x-order ceil(n0 / 2^k).
struct LevelRecord {
    std::size_t level = 0;
    std::size_t n = 0;
    /// P(x, y); power projection only.
    std::optional<Bidegree> numerator_shape;
    std::optional<Bidegree> numerator_scanned;
    /// Q(x, y).
    Bidegree denominator_shape;
    Bidegree denominator_scanned;
    /// W(x, y) returned by the next level; composition only, absent at n = 1.
    std::optional<Bidegree> lifted_shape;
    std::optional<Bidegree> lifted_scanned;
    /// deg_y Q as carried through the composition recursion.
    std::optional<std::size_t> tracked_qdeg_y;
};

/// Instrumentation sink. Passing one to power_projection or compose_series
/// records every level; passing none costs nothing.
struct GraeffeTrace {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<LevelRecord> levels;
};

/// Checks every recorded level against
///   bideg P, bideg Q <= (ceil(n / 2^k) - 1, min(2^k, m - 1)),
///   bideg W <= (ceil(n / 2^(k+1)) - 1, min(2^(k+1), m - 1)),
/// and that the tracked y-degree of Q bounds its scanned y-degree.
/// Returns a description of the first violation.
std::optional<std::string> find_bidegree_violation(const GraeffeTrace& trace);

}  // namespace psc
