#pragma once

// Lattice paths attached to a variable Y[i,k], their corner monomials, and
// the sums over tuples of paths that build characters. A path for (i,k)
// starts at height i+k over column 0, ends at height n+1-i+k over column
// n+1, and changes height by exactly 1 per column. Heights are stored
// absolutely, never reduced; reduction happens only when corners are turned
// into monomial factors.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "core.hpp"

namespace epschar {

struct Path {
    int i;
    int k;
    std::vector<int> ys;  // heights over columns 0..n+1

    bool operator==(const Path& o) const { return i == o.i && k == o.k && ys == o.ys; }
};

// Columns of local maxima (upper) and minima (lower), each with its height.
struct CornerSet {
    std::vector<std::pair<int, int>> upper;
    std::vector<std::pair<int, int>> lower;
};

inline void check_node_range(int i, const LatticeConfig& cfg, const char* who) {
    if (i < 1 || i > cfg.n)
        throw domain_error(std::string(who) + ": node " + std::to_string(i) +
                           " out of range 1.." + std::to_string(cfg.n));
}

// All paths for (i,k) in lexicographic order on the height sequence.
// Generation tries the downward step first, which is exactly lexicographic
// order; branches that can no longer reach the fixed right endpoint are cut.
inline std::vector<Path> enumerate_paths(int i, int k, const LatticeConfig& cfg) {
    check_node_range(i, cfg, "enumerate_paths");
    const int cols = cfg.n + 2;
    const int target = cfg.n + 1 - i + k;
    std::vector<Path> out;
    std::vector<int> ys;
    ys.reserve(cols);
    ys.push_back(i + k);
    std::function<void()> rec = [&]() {
        int col = static_cast<int>(ys.size()) - 1;
        if (col == cols - 1) {
            if (ys.back() == target) out.push_back(Path{i, k, ys});
            return;
        }
        int remaining = cols - 1 - col;
        for (int step : {-1, +1}) {
            int y = ys.back() + step;
            if (std::abs(target - y) > remaining - 1) continue;
            ys.push_back(y);
            rec();
            ys.pop_back();
        }
    };
    rec();
    return out;
}

inline CornerSet corners(const Path& p) {
    CornerSet c;
    for (int j = 1; j + 1 < static_cast<int>(p.ys.size()); ++j) {
        if (p.ys[j - 1] == p.ys[j] + 1 && p.ys[j + 1] == p.ys[j] + 1)
            c.upper.emplace_back(j, p.ys[j]);
        if (p.ys[j - 1] == p.ys[j] - 1 && p.ys[j + 1] == p.ys[j] - 1)
            c.lower.emplace_back(j, p.ys[j]);
    }
    return c;
}

// Product of Y[j,l] over upper corners and Y[j,l]^-1 over lower corners.
// Corners of a single path sit at distinct columns, so no cancellation
// can occur within one path.
inline Monomial monomial_of_path(const Path& p, const LatticeConfig& cfg) {
    Monomial m;
    CornerSet c = corners(p);
    for (auto [j, l] : c.upper) m.accumulate(j, l, +1, cfg);
    for (auto [j, l] : c.lower) m.accumulate(j, l, -1, cfg);
    return m;
}

// The unique path with no lower corner; its monomial is Y[i,k].
inline Path highest_path(int i, int k, const LatticeConfig& cfg) {
    check_node_range(i, cfg, "highest_path");
    Path p{i, k, {}};
    for (int j = 0; j <= cfg.n + 1; ++j) p.ys.push_back(j <= i ? i + k - j : j - i + k);
    return p;
}

// The unique path with no upper corner; its monomial is Y[n+1-i,n+1+k]^-1.
inline Path lowest_path(int i, int k, const LatticeConfig& cfg) {
    check_node_range(i, cfg, "lowest_path");
    Path p{i, k, {}};
    const int peak = cfg.n + 1 - i;
    for (int j = 0; j <= cfg.n + 1; ++j)
        p.ys.push_back(j <= peak ? i + k + j : 2 * cfg.n + 2 - i + k - j);
    return p;
}

// Strict componentwise comparison of height sequences.
inline bool strictly_above(const Path& p, const Path& q) {
    if (p.ys.size() != q.ys.size())
        throw domain_error("strictly_above: paths live on different column ranges");
    for (size_t j = 0; j < p.ys.size(); ++j)
        if (p.ys[j] >= q.ys[j]) return false;
    return true;
}

// No column at which the two heights agree modulo 2*ell. Only meaningful
// at a root of unity.
inline bool tube_disjoint(const Path& p, const Path& q, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("tube_disjoint: undefined in generic mode");
    if (p.ys.size() != q.ys.size())
        throw domain_error("tube_disjoint: paths live on different column ranges");
    for (size_t j = 0; j < p.ys.size(); ++j)
        if ((p.ys[j] - q.ys[j]) % cfg.period() == 0) return false;
    return true;
}

namespace detail {

// Shares the validation between the two move directions. Checks that
// (j, apex) is a corner of the requested kind and that no corner of p sits
// strictly inside the columns (j-r, j) or (j, j+r).
inline void check_move(const Path& p, int j, int apex, int r, bool want_upper,
                       const LatticeConfig& cfg, const char* who) {
    check_node_range(j, cfg, who);
    if (r < 1) throw domain_error(std::string(who) + ": width must be >= 1");
    if (r >= j || r >= cfg.n + 1 - j)
        throw domain_error(std::string(who) + ": width " + std::to_string(r) +
                           " reaches the boundary from node " + std::to_string(j));
    if (p.ys[j] != apex)
        throw domain_error(std::string(who) + ": path has height " + std::to_string(p.ys[j]) +
                           " at column " + std::to_string(j) + ", expected " +
                           std::to_string(apex));
    bool is_upper = p.ys[j - 1] == p.ys[j] + 1 && p.ys[j + 1] == p.ys[j] + 1;
    bool is_lower = p.ys[j - 1] == p.ys[j] - 1 && p.ys[j + 1] == p.ys[j] - 1;
    if (want_upper ? !is_upper : !is_lower)
        throw domain_error(std::string(who) + ": no " + (want_upper ? "upper" : "lower") +
                           " corner at column " + std::to_string(j));
    for (int c = j - r + 1; c < j + r; ++c) {
        if (c == j) continue;
        bool corner = (p.ys[c - 1] == p.ys[c] + 1 && p.ys[c + 1] == p.ys[c] + 1) ||
                      (p.ys[c - 1] == p.ys[c] - 1 && p.ys[c + 1] == p.ys[c] - 1);
        if (corner)
            throw domain_error(std::string(who) + ": corner at column " + std::to_string(c) +
                               " blocks a width-" + std::to_string(r) + " move at column " +
                               std::to_string(j));
    }
}

}  // namespace detail

// Replaces the peak at (j, y-r) by a valley at (j, y+r), leaving the path
// unchanged outside columns (j-r, j+r). The monomial changes by the inverse
// of the composite factor move_factor(j, y, r).
inline Path lower_move(const Path& p, int j, int y, int r, const LatticeConfig& cfg) {
    detail::check_move(p, j, y - r, r, /*want_upper=*/true, cfg, "lower_move");
    Path q = p;
    for (int u = 1; u < 2 * r; ++u) q.ys[j - r + u] = y - r + std::min(u, 2 * r - u) + r;
    return q;
}

// Inverse of lower_move: replaces the valley at (j, y+r) by a peak at
// (j, y-r).
inline Path raise_move(const Path& p, int j, int y, int r, const LatticeConfig& cfg) {
    detail::check_move(p, j, y + r, r, /*want_upper=*/false, cfg, "raise_move");
    Path q = p;
    for (int u = 1; u < 2 * r; ++u) q.ys[j - r + u] = y + r - std::min(u, 2 * r - u) - r;
    return q;
}

// The composite factor governing a width-r move anchored at (j, y): a
// product of elementary A-variables filling the diamond between the peak
// and the valley. lower_move divides the path monomial by this, raise_move
// multiplies by it.
inline Monomial move_factor(int j, int y, int r, const LatticeConfig& cfg) {
    check_node_range(j, cfg, "move_factor");
    Monomial m;
    for (int t = 0; t < r; ++t)
        for (int u = j - t; u <= j + t; u += 2)
            m = mono_mul(m, a_variable(u, y - r + t + 1, cfg), cfg);
    for (int t = 0; t + 2 <= r; ++t)
        for (int u = j - t; u <= j + t; u += 2)
            m = mono_mul(m, a_variable(u, y + r - t - 1, cfg), cfg);
    return m;
}

// Shifts every height by delta, which must vanish modulo 2*ell so the
// corner monomial is unchanged.
inline Path translate_path(const Path& p, int delta, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("translate_path: undefined in generic mode");
    if (delta % cfg.period() != 0)
        throw domain_error("translate_path: shift " + std::to_string(delta) +
                           " is not a multiple of " + std::to_string(cfg.period()));
    Path q = p;
    q.k += delta;
    for (int& y : q.ys) y += delta;
    return q;
}

// Sum of the tuple monomials over all tuples (p_1,...,p_m), p_t a path for
// points[t], with each path strictly above the next. Strictness is
// transitive, so checking consecutive pairs is exact. Partial tuples are
// abandoned at the first failing comparison.
inline Character tuple_sum_nonoverlapping(const std::vector<std::pair<int, int>>& points,
                                          const LatticeConfig& cfg) {
    if (points.empty())
        throw domain_error("tuple_sum_nonoverlapping: empty point list");
    std::vector<std::vector<Path>> pools;
    pools.reserve(points.size());
    for (auto [i, k] : points) pools.push_back(enumerate_paths(i, k, cfg));
    Character sum;
    std::vector<const Path*> chosen;
    Monomial acc;
    std::function<void(size_t, const Monomial&)> rec = [&](size_t t, const Monomial& m) {
        if (t == pools.size()) {
            sum.add_term(m, 1);
            return;
        }
        for (const Path& p : pools[t]) {
            if (!chosen.empty() && !strictly_above(*chosen.back(), p)) continue;
            chosen.push_back(&p);
            rec(t + 1, mono_mul(m, monomial_of_path(p, cfg), cfg));
            chosen.pop_back();
        }
    };
    rec(0, Monomial::unit());
    return sum;
}

// Sum of the tuple monomials over tuples of pairwise tube-disjoint paths,
// all points on a common node. Tube-disjointness is not transitive, so a
// new path is checked against every previously chosen one.
inline Character tuple_sum_tube_disjoint(const std::vector<std::pair<int, int>>& points,
                                         const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("tuple_sum_tube_disjoint: undefined in generic mode");
    if (points.empty())
        throw domain_error("tuple_sum_tube_disjoint: empty point list");
    for (auto [i, k] : points)
        if (i != points.front().first)
            throw domain_error("tuple_sum_tube_disjoint: points must share one node");
    std::vector<std::vector<Path>> pools;
    pools.reserve(points.size());
    for (auto [i, k] : points) pools.push_back(enumerate_paths(i, k, cfg));
    Character sum;
    std::vector<const Path*> chosen;
    std::function<void(size_t, const Monomial&)> rec = [&](size_t t, const Monomial& m) {
        if (t == pools.size()) {
            sum.add_term(m, 1);
            return;
        }
        for (const Path& p : pools[t]) {
            bool ok = true;
            for (const Path* q : chosen)
                if (!tube_disjoint(*q, p, cfg)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&p);
            rec(t + 1, mono_mul(m, monomial_of_path(p, cfg), cfg));
            chosen.pop_back();
        }
    };
    rec(0, Monomial::unit());
    return sum;
}

}  // namespace epschar
