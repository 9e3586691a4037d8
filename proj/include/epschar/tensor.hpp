#pragma once

// Irreducibility of tensor products of fundamental modules at a root of
// unity, by the explicit incongruence criterion on spectral gaps.

#include <cstdlib>
#include <vector>

#include "core.hpp"
#include "paths.hpp"

namespace epschar {

struct FundamentalFactor {
    int i;
    int xi;
};

// True exactly when, for every t up to the smaller reach of the two nodes,
// |xi2 - xi1| avoids both residues +-(2t + |i2 - i1|) modulo 2*ell.
inline bool pairwise_irreducible(const FundamentalFactor& f1, const FundamentalFactor& f2,
                                 const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("pairwise_irreducible: requires root-of-unity mode");
    check_node_range(f1.i, cfg, "pairwise_irreducible");
    check_node_range(f2.i, cfg, "pairwise_irreducible");
    const int period = cfg.period();
    int delta = std::abs(f2.xi - f1.xi) % period;
    int di = std::abs(f2.i - f1.i);
    int reach = std::min(std::min(f1.i, f2.i), std::min(cfg.n + 1 - f1.i, cfg.n + 1 - f2.i));
    for (int t = 1; t <= reach; ++t) {
        int bad = (2 * t + di) % period;
        if (delta == bad || delta == ((period - bad) % period)) return false;
    }
    return true;
}

struct TupleIrreducibility {
    bool pairwise_ok;
    // The criterion is only necessary for three or more factors: a failing
    // pair certifies reducibility, while success means no pair objects.
    const char* label() const { return pairwise_ok ? "pairwise-consistent" : "reducible-certified"; }
};

inline TupleIrreducibility tuple_irreducibility_necessary(
    const std::vector<FundamentalFactor>& factors, const LatticeConfig& cfg) {
    if (factors.size() < 2)
        throw domain_error("tuple_irreducibility_necessary: need at least two factors");
    for (size_t a = 0; a < factors.size(); ++a)
        for (size_t b = a + 1; b < factors.size(); ++b)
            if (!pairwise_irreducible(factors[a], factors[b], cfg))
                return TupleIrreducibility{false};
    return TupleIrreducibility{true};
}

}  // namespace epschar
