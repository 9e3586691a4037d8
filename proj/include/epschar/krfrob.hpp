#pragma once

// Kirillov-Reshetikhin characters through the tube-disjoint path sum, the
// factorization of a dominant monomial into an acyclic part and a part made
// of full spectral orbits, classical characters by tableau enumeration, and
// the composite character that glues the two parts back together.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "degree2.hpp"
#include "paths.hpp"
#include "snake.hpp"
#include "textio.hpp"

namespace epschar {

// A classical highest weight given by fundamental-weight multiplicities
// c[1..n]; its partition shape has rows lambda_j = sum_{i >= j} c_i.
struct ClassicalWeight {
    std::vector<int> c;  // index 0 unused

    explicit ClassicalWeight(const LatticeConfig& cfg) : c(cfg.n + 1, 0) {}

    std::vector<int> partition() const {
        std::vector<int> lambda;
        int acc = 0;
        for (int j = static_cast<int>(c.size()) - 1; j >= 1; --j) {
            acc += c[j];
            lambda.push_back(acc);
        }
        std::reverse(lambda.begin(), lambda.end());
        while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
        return lambda;
    }
};

// A monomial in the orbit variables: per node, the number of full
// same-parity spectral orbits, plus that node's residue parity. Expanding
// node i multiplies in all ell variables Y[i, parity + 2j], j = 0..ell-1,
// once per multiplicity.
struct BoldMonomial {
    std::vector<int> mult;    // index 0 unused
    std::vector<int> parity;  // residue parity per node, 0 or 1

    explicit BoldMonomial(const LatticeConfig& cfg)
        : mult(cfg.n + 1, 0), parity(cfg.n + 1, 0) {}

    bool is_trivial() const {
        for (int m : mult)
            if (m != 0) return false;
        return true;
    }

    Monomial expansion(const LatticeConfig& cfg) const {
        Monomial m;
        for (int i = 1; i <= cfg.n; ++i)
            for (int j = 0; j < cfg.ell; ++j) m.accumulate(i, parity[i] + 2 * j, mult[i], cfg);
        return m;
    }
};

// Character of the module whose highest weight is a run of z consecutive
// same-node variables Y[i,k], Y[i,k+2], ..., spanning at most one period:
// the sum over tuples of pairwise tube-disjoint paths.
inline Character kr_char(int i, int k_start, int z, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) throw domain_error("kr_char: requires root-of-unity mode");
    check_node_range(i, cfg, "kr_char");
    if (z < 1) throw domain_error("kr_char: run length must be >= 1");
    if (z > cfg.ell)
        throw domain_error("kr_char: run length " + std::to_string(z) + " exceeds ell; use kr_char_general");
    std::vector<std::pair<int, int>> pts;
    for (int t = 0; t < z; ++t) pts.emplace_back(i, k_start + 2 * t);
    return tuple_sum_tube_disjoint(pts, cfg);
}

// All semistandard fillings of the partition shape with entries 1..n+1,
// reported through their contents. Rows are built left to right under the
// weak row and strict column conditions; no determinant shortcut.
inline void for_each_tableau_content(const std::vector<int>& lambda, int maxentry,
                                     const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> content(maxentry + 1, 0);  // content[e] = count of entry e
    std::vector<std::vector<int>> rows(lambda.size());
    std::function<void(size_t)> fill_row = [&](size_t r) {
        if (r == lambda.size()) {
            visit(content);
            return;
        }
        std::vector<int>& row = rows[r];
        row.assign(lambda[r], 0);
        std::function<void(int)> fill_cell = [&](int c) {
            if (c == lambda[r]) {
                fill_row(r + 1);
                return;
            }
            int lo = c > 0 ? row[c - 1] : 1;                       // weakly increasing row
            if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);      // strictly increasing column
            for (int e = lo; e <= maxentry; ++e) {
                row[c] = e;
                ++content[e];
                fill_cell(c + 1);
                --content[e];
            }
        };
        fill_cell(0);
    };
    fill_row(0);
}

// Formal character of the classical module with the given highest weight,
// as a Laurent polynomial in y_1..y_n encoded by exponent vectors. A
// tableau of content (m_1,...,m_{n+1}) contributes prod_i y_i^(m_i-m_{i+1}).
using WeightPoly = std::map<std::vector<int>, Coeff>;

inline WeightPoly classical_character(const ClassicalWeight& w, const LatticeConfig& cfg) {
    std::vector<int> lambda = w.partition();
    if (static_cast<int>(lambda.size()) > cfg.n)
        throw domain_error("classical_character: partition has more than n rows");
    WeightPoly poly;
    for_each_tableau_content(lambda, cfg.n + 1, [&](const std::vector<int>& content) {
        std::vector<int> expo(cfg.n + 1, 0);  // index 0 unused
        for (int i = 1; i <= cfg.n; ++i) expo[i] = content[i] - content[i + 1];
        poly[expo] += 1;
    });
    if (poly.empty()) poly[std::vector<int>(cfg.n + 1, 0)] = 1;  // empty shape: trivial module
    return poly;
}

namespace detail {

// The single residue-parity class shared by every expanded node of a bold
// monomial; the parity at node i must equal (i - a) mod 2 for one common a.
inline int common_class(const BoldMonomial& b, const LatticeConfig& cfg) {
    std::optional<int> cls;
    for (int i = 1; i <= cfg.n; ++i) {
        if (b.mult[i] == 0) continue;
        int a = ((i - b.parity[i]) % 2 + 2) % 2;
        if (!cls) cls = a;
        if (*cls != a)
            throw domain_error(
                "frobenius_pullback: orbit variables span two spectral classes; unsupported");
    }
    return cls.value_or(0);
}

}  // namespace detail

// Character of the orbit part: the classical character of the weight
// sum_i mult_i * omega_i with each y_i replaced by the full orbit product
// prod_{j=0}^{ell-1} Y[i, c_i + 2j], where c_i follows the common class.
inline Character frobenius_pullback(const BoldMonomial& b, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("frobenius_pullback: requires root-of-unity mode");
    if (b.is_trivial()) return Character::of(Monomial::unit());
    int cls = detail::common_class(b, cfg);
    ClassicalWeight w(cfg);
    for (int i = 1; i <= cfg.n; ++i) w.c[i] = b.mult[i];
    Character out;
    for (const auto& [expo, coeff] : classical_character(w, cfg)) {
        Monomial m;
        for (int i = 1; i <= cfg.n; ++i) {
            if (expo[i] == 0) continue;
            int ci = ((i - cls) % 2 + 2) % 2;
            for (int j = 0; j < cfg.ell; ++j) m.accumulate(i, ci + 2 * j, expo[i], cfg);
        }
        out.add_term(m, coeff);
    }
    return out;
}

// Character of a same-node run of arbitrary length: z = a*ell + b splits
// into a full-orbit power handled by the pullback and a remainder run of
// length b < ell.
inline Character kr_char_general(int i, int k_start, int z, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) throw domain_error("kr_char_general: requires root-of-unity mode");
    check_node_range(i, cfg, "kr_char_general");
    if (z < 1) throw domain_error("kr_char_general: run length must be >= 1");
    int a = z / cfg.ell;
    int b = z % cfg.ell;
    if (a == 0) return kr_char(i, k_start, z, cfg);
    BoldMonomial bold(cfg);
    bold.mult[i] = a;
    bold.parity[i] = ((k_start % 2) + 2) % 2;
    Character pull = frobenius_pullback(bold, cfg);
    if (b == 0) return pull;
    return char_mul(pull, kr_char(i, k_start, b, cfg), cfg);
}

// Splits a dominant monomial into an orbit part (per node, as many full
// same-parity orbits as the minimum exponent over that node's ell residues
// supports) and the acyclic remainder. The two multiply back to the input.
inline std::pair<Monomial, BoldMonomial> acyclic_factor(const Monomial& m,
                                                        const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) throw domain_error("acyclic_factor: requires root-of-unity mode");
    if (!is_dominant(m)) throw domain_error("acyclic_factor: monomial is not dominant");
    BoldMonomial bold(cfg);
    std::vector<int> node_parity(cfg.n + 1, -1);
    for (const auto& [key, e] : m.factors()) {
        int p = ((key.spectral % 2) + 2) % 2;
        if (node_parity[key.node] == -1) node_parity[key.node] = p;
        if (node_parity[key.node] != p)
            throw domain_error("acyclic_factor: node " + std::to_string(key.node) +
                               " mixes spectral parities");
    }
    for (int i = 1; i <= cfg.n; ++i) {
        if (node_parity[i] == -1) continue;
        bold.parity[i] = node_parity[i];
        int mn = 0;
        for (int j = 0; j < cfg.ell; ++j) {
            VarKey key{i, canonical_index(node_parity[i] + 2 * j, cfg)};
            auto it = m.factors().find(key);
            int e = it == m.factors().end() ? 0 : it->second;
            mn = j == 0 ? e : std::min(mn, e);
        }
        bold.mult[i] = mn;
    }
    Monomial rest = mono_mul(m, bold.expansion(cfg).inverse(), cfg);
    return {rest, bold};
}

namespace detail {

struct NodeRun {
    int node;
    int anchor;
    int length;
};

// Recognizes an acyclic residual as a run Y[i,k], Y[i,k+2], ..., all
// exponents one, on a single node, occupying a contiguous arc of the
// same-parity residue cycle but not all of it. The anchor is the unique
// member whose predecessor residue (two below, cyclically) is absent.
inline std::optional<NodeRun> single_node_run(const Monomial& m, const LatticeConfig& cfg) {
    int node = -1;
    std::vector<int> residues;
    for (const auto& [key, e] : m.factors()) {
        if (e != 1) return std::nullopt;
        if (node == -1) node = key.node;
        if (key.node != node) return std::nullopt;
        residues.push_back(key.spectral);
    }
    int z = static_cast<int>(residues.size());
    if (z == 0 || z >= cfg.ell) return std::nullopt;
    int parity = ((residues[0] % 2) + 2) % 2;
    for (int r : residues)
        if ((((r % 2) + 2) % 2) != parity) return std::nullopt;
    auto has = [&](int r) {
        return std::find(residues.begin(), residues.end(), canonical_index(r, cfg)) !=
               residues.end();
    };
    int anchor = -1;
    for (int r : residues) {
        if (has(r - 2)) continue;
        if (anchor != -1) return std::nullopt;  // two arc starts: not contiguous
        anchor = r;
    }
    if (anchor == -1) return std::nullopt;  // no start: full cycle, excluded above
    for (int t = 0; t < z; ++t)
        if (!has(anchor + 2 * t)) return std::nullopt;
    return NodeRun{node, anchor, z};
}

}  // namespace detail

// Character of any dominant monomial whose acyclic part falls in an
// implemented family: trivial, a single variable, degree two, or a
// single-node run. The orbit part always goes through the pullback.
inline Character full_char(const Monomial& m, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) throw domain_error("full_char: requires root-of-unity mode");
    if (!is_dominant(m)) throw domain_error("full_char: monomial is not dominant");
    auto [rest, bold] = acyclic_factor(m, cfg);
    Character pull = frobenius_pullback(bold, cfg);
    int degree = 0;
    for (const auto& [key, e] : rest.factors()) degree += e;
    Character base;
    if (degree == 0) {
        base = Character::of(Monomial::unit());
    } else if (degree == 1) {
        const VarKey& key = rest.factors().begin()->first;
        base = fundamental_eps_character(key.node, key.spectral, cfg);
    } else if (degree == 2) {
        std::vector<std::pair<VarKey, int>> fs(rest.factors().begin(), rest.factors().end());
        if (fs.size() == 1)
            base = degree2_char(fs[0].first.node, fs[0].first.spectral, fs[0].first.node,
                                fs[0].first.spectral, cfg);
        else
            base = degree2_char(fs[0].first.node, fs[0].first.spectral, fs[1].first.node,
                                fs[1].first.spectral, cfg);
    } else if (auto run = detail::single_node_run(rest, cfg)) {
        base = kr_char(run->node, run->anchor, run->length, cfg);
    } else {
        throw domain_error("full_char: no implemented family covers the residual factor " +
                           format_monomial(rest));
    }
    return char_mul(pull, base, cfg);
}

}  // namespace epschar
