#pragma once

// Snake-position geometry on the (node, spectral) lattice: the admissibility
// windows between points, classification of point sequences, conversion of a
// dominant monomial into an equivalent snake at a root of unity, and the
// character sums attached to snakes.

#include <string>
#include <vector>

#include "core.hpp"
#include "paths.hpp"

namespace epschar {

struct SnakePoint {
    int i;
    int k;
    bool operator==(const SnakePoint&) const = default;
};

struct Snake {
    std::vector<SnakePoint> points;
};

struct SnakeClass {
    bool is_snake;
    bool is_minimal;
    bool is_prime;
};

// Minimal admissible spectral gap between nodes i and iprime.
inline int h0(int i, int iprime) { return std::abs(iprime - i) + 2; }

// Spectral distance between two points.
inline int h(int k, int kprime) { return std::abs(kprime - k); }

// All spectral values k' such that (j, k') sits in prime position after
// (i, k): the gap k'-k runs from h0(i,j) to min(2n+2-i-j, i+j) in steps of
// two. The list is never empty for in-range nodes; its length is
// min(i, j, n+1-i, n+1-j).
inline std::vector<int> prime_snake_window(int i, int k, int j, const LatticeConfig& cfg) {
    check_node_range(i, cfg, "prime_snake_window");
    check_node_range(j, cfg, "prime_snake_window");
    std::vector<int> out;
    int hi = std::min(2 * cfg.n + 2 - i - j, i + j);
    for (int gap = h0(i, j); gap <= hi; gap += 2) out.push_back(k + gap);
    return out;
}

inline SnakeClass classify(const Snake& s, const LatticeConfig& cfg) {
    for (const SnakePoint& p : s.points) check_node_range(p.i, cfg, "classify");
    SnakeClass c{true, true, true};
    for (size_t t = 1; t < s.points.size(); ++t) {
        const SnakePoint& a = s.points[t - 1];
        const SnakePoint& b = s.points[t];
        int gap = b.k - a.k;
        int lo = h0(a.i, b.i);
        if (gap < lo || (gap - lo) % 2 != 0) {
            c.is_snake = false;
            break;
        }
        if (gap != lo) c.is_minimal = false;
        if (gap > std::min(2 * cfg.n + 2 - a.i - b.i, a.i + b.i)) c.is_prime = false;
    }
    if (!c.is_snake) c.is_minimal = c.is_prime = false;
    return c;
}

inline Monomial monomial_of_snake(const Snake& s, const LatticeConfig& cfg) {
    Monomial m;
    for (const SnakePoint& p : s.points) m.accumulate(p.i, p.k, +1, cfg);
    return m;
}

struct SnakifyResult {
    Monomial reduced;  // the snake's monomial back in the canonical ring; equals the input
    Snake snake;
};

// Converts a dominant monomial, all of whose variables lie in one parity
// class, into a snake with the same canonical monomial. Factors are expanded
// into unit copies sorted by node then spectral; the first copy keeps its
// spectral value and each later copy is pushed up by the least multiple of
// 2*ell that restores the snake gap to its predecessor.
inline SnakifyResult snakify(const Monomial& m, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) throw domain_error("snakify: requires root-of-unity mode");
    if (!is_dominant(m)) throw domain_error("snakify: input monomial is not dominant");
    int cls = -1;
    for (const auto& [key, e] : m.factors()) {
        int c = ((key.node - key.spectral) % 2 + 2) % 2;
        if (cls == -1) cls = c;
        if (c != cls)
            throw domain_error("snakify: variables span both parity classes");
    }
    std::vector<SnakePoint> copies;
    for (const auto& [key, e] : m.factors())
        for (int c = 0; c < e; ++c) copies.push_back({key.node, key.spectral});
    Snake out;
    out.points.reserve(copies.size());
    const int period = cfg.period();
    for (size_t t = 0; t < copies.size(); ++t) {
        if (t == 0) {
            out.points.push_back(copies[0]);
            continue;
        }
        const SnakePoint& prev = out.points.back();
        // least b with copies[t].k + 2*b*ell >= prev.k + (node gap) + 2
        int num = prev.k + (copies[t].i - prev.i) + 2 - copies[t].k;
        int b = num / period;
        if (num % period != 0 && num > 0) ++b;
        out.points.push_back({copies[t].i, copies[t].k + b * period});
    }
    SnakifyResult res{monomial_of_snake(out, cfg), std::move(out)};
    if (!(res.reduced == m))
        throw internal_error("snakify: output does not reduce to its input");
    if (!classify(res.snake, cfg).is_snake)
        throw internal_error("snakify: output is not a snake");
    return res;
}

// Character of a snake as the sum over tuples of mutually non-overlapping
// paths, one per point, with no index reduction (generic mode only).
inline Character snake_q_character(const Snake& s, const LatticeConfig& cfg) {
    if (cfg.root_of_unity())
        throw domain_error("snake_q_character: requires generic mode");
    if (!classify(s, cfg).is_snake)
        throw domain_error("snake_q_character: points do not form a snake");
    if (s.points.empty()) return Character::of(Monomial::unit());
    std::vector<std::pair<int, int>> pts;
    for (const SnakePoint& p : s.points) pts.emplace_back(p.i, p.k);
    return tuple_sum_nonoverlapping(pts, cfg);
}

// Character of a single variable Y[i,k]: the one-path sum. At a root of
// unity the corner indices are reduced; the result always has exactly one
// dominant term, Y[i,k] itself.
inline Character fundamental_eps_character(int i, int k, const LatticeConfig& cfg) {
    check_node_range(i, cfg, "fundamental_eps_character");
    Character sum;
    for (const Path& p : enumerate_paths(i, k, cfg)) sum.add_term(monomial_of_path(p, cfg), 1);
    return sum;
}

}  // namespace epschar
