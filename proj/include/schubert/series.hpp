#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/checked.hpp"
#include "schubert/coroot.hpp"
#include "schubert/errors.hpp"
#include "schubert/root_system.hpp"

namespace schubert {

using SeriesPrefix = std::vector<long long>;

// Coefficients 0..cutoff of the product of the geometric series in the
// exponents: the level sizes of the full poset. Dividing by (1 - t^e)
// within a truncation is the running prefix sum with stride e.
inline SeriesPrefix bott_prefix(const RootSystem& rs, int cutoff) {
    if (cutoff < 0) throw Error("negative series cutoff");
    SeriesPrefix c(static_cast<std::size_t>(cutoff) + 1, 0);
    c[0] = 1;
    for (int e : rs.exponents()) {
        for (int i = e; i <= cutoff; ++i) {
            c[static_cast<std::size_t>(i)] =
                checked_add(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i - e)]);
        }
    }
    return c;
}

// Position and size of the first fork of the poset. In the rank-one
// system the bottom never forks, reported as the infinite variant.
struct ForkStats {
    bool infinite = false;
    int fork_level = 0;      // number of one-element levels before the fork
    long long options = 0;   // ascent count at the fork
};

inline ForkStats fork_stats(const RootSystem& rs) {
    ForkStats out;
    if (rs.type_label() == TypeLabel::A && rs.rank() == 1) {
        out.infinite = true;
        return out;
    }

    // Walk the unique bottom chain of the weak order until it branches.
    auto rs_ptr = RootSystem::build(rs.type_label(), rs.rank());
    CorootElement cur = CorootElement::origin(rs_ptr);
    int steps = 0;
    std::vector<int> up = cur.ascents();
    while (up.size() == 1) {
        cur = cur.fire(up[0]);
        ++steps;
        up = cur.ascents();
        if (steps > 64) throw Error("bottom chain failed to fork");
    }
    out.fork_level = steps + 1;
    out.options = static_cast<long long>(up.size());

    // Independent route: the first series coefficient above one.
    SeriesPrefix pre = bott_prefix(rs, out.fork_level + 2);
    int k = -1;
    for (std::size_t i = 1; i < pre.size(); ++i) {
        if (pre[i] > 1) {
            k = static_cast<int>(i);
            break;
        }
    }
    if (k != out.fork_level || (k >= 0 && pre[static_cast<std::size_t>(k)] != out.options)) {
        throw Error("series fork and poset fork disagree");
    }
    return out;
}

}  // namespace schubert
