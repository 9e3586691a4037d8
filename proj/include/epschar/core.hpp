#pragma once

// Ambient configuration, Laurent monomials in the variables Y[node, spectral],
// and integer-coefficient formal sums of them. At a root of unity the spectral
// index of every stored variable is reduced into [0, 2*ell); in generic mode
// indices are kept verbatim. Variables at the boundary nodes 0 and n+1 are
// trivial and are erased here, centrally, at construction time.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epschar {

using Coeff = boost::multiprecision::cpp_int;

// Violated operation precondition (caller error).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal consistency condition (library bug if it ever fires).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

enum class Mode { RootOfUnity, GenericQ };

struct LatticeConfig {
    int n;
    int ell;
    Mode mode;

    LatticeConfig(int n_, int ell_, Mode mode_ = Mode::RootOfUnity)
        : n(n_), ell(ell_), mode(mode_) {
        if (n < 1) throw domain_error("LatticeConfig: rank n must be >= 1");
        if (ell < 2) throw domain_error("LatticeConfig: ell must be >= 2");
    }

    int period() const { return 2 * ell; }
    bool root_of_unity() const { return mode == Mode::RootOfUnity; }
};

// Spectral index reduction: identity in generic mode, representative in
// [0, 2*ell) at a root of unity.
inline int canonical_index(int s, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) return s;
    int r = s % cfg.period();
    return r < 0 ? r + cfg.period() : r;
}

struct VarKey {
    int node;
    int spectral;
    auto operator<=>(const VarKey&) const = default;
};

class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial{}; }

    static Monomial variable(int node, int spectral, const LatticeConfig& cfg, int exp = 1) {
        Monomial m;
        m.accumulate(node, spectral, exp, cfg);
        return m;
    }

    // Multiplies Y[node, spectral]^exp into this monomial, applying the
    // boundary convention and index canonicalization. The only mutating
    // entry point; used by factories and mono_mul.
    void accumulate(int node, int spectral, int exp, const LatticeConfig& cfg) {
        if (node == 0 || node == cfg.n + 1) return;
        if (node < 0 || node > cfg.n + 1)
            throw domain_error("Monomial: node " + std::to_string(node) + " out of range");
        if (exp == 0) return;
        VarKey key{node, canonical_index(spectral, cfg)};
        auto it = factors_.find(key);
        if (it == factors_.end()) {
            factors_.emplace(key, exp);
        } else if ((it->second += exp) == 0) {
            factors_.erase(it);
        }
    }

    const std::map<VarKey, int>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    Monomial inverse() const {
        Monomial m = *this;
        for (auto& [k, e] : m.factors_) e = -e;
        return m;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    // Canonical term order: lexicographic on the sorted (node, spectral,
    // exponent) triples, which is exactly the map's own lexicographic order.
    bool operator<(const Monomial& o) const { return factors_ < o.factors_; }

private:
    std::map<VarKey, int> factors_;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b, const LatticeConfig& cfg) {
    Monomial r = a;
    for (const auto& [k, e] : b.factors()) r.accumulate(k.node, k.spectral, e, cfg);
    return r;
}

inline bool is_dominant(const Monomial& m) {
    for (const auto& [k, e] : m.factors())
        if (e < 0) return false;
    return true;
}

inline bool is_antidominant(const Monomial& m) {
    for (const auto& [k, e] : m.factors())
        if (e > 0) return false;
    return true;
}

// A[i,s] = Y[i,s+1]*Y[i,s-1]*Y[i-1,s]^-1*Y[i+1,s]^-1 with the type-A
// neighbor structure; boundary neighbor factors vanish by convention.
inline Monomial a_variable(int i, int s, const LatticeConfig& cfg) {
    if (i < 1 || i > cfg.n) throw domain_error("a_variable: node out of range");
    Monomial m;
    m.accumulate(i, s + 1, +1, cfg);
    m.accumulate(i, s - 1, +1, cfg);
    m.accumulate(i - 1, s, -1, cfg);
    m.accumulate(i + 1, s, -1, cfg);
    return m;
}

class Character {
public:
    Character() = default;

    static Character zero() { return Character{}; }

    static Character of(const Monomial& m, Coeff c = 1) {
        Character ch;
        ch.add_term(m, std::move(c));
        return ch;
    }

    void add_term(const Monomial& m, const Coeff& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool operator==(const Character& o) const { return terms_ == o.terms_; }

private:
    std::map<Monomial, Coeff> terms_;
};

inline Character char_add(const Character& a, const Character& b) {
    Character r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

inline Character char_sub(const Character& a, const Character& b) {
    Character r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
    return r;
}

inline Character char_scale(const Character& a, const Coeff& k) {
    Character r;
    if (k == 0) return r;
    for (const auto& [m, c] : a.terms()) r.add_term(m, c * k);
    return r;
}

inline Character char_mul(const Character& a, const Character& b, const LatticeConfig& cfg) {
    Character r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mono_mul(ma, mb, cfg), ca * cb);
    return r;
}

// Sum of coefficients: every variable evaluated at 1. For genuine
// characters this is the module dimension.
inline Coeff dimension(const Character& c) {
    Coeff d = 0;
    for (const auto& [m, coeff] : c.terms()) d += coeff;
    return d;
}

inline std::vector<std::pair<Monomial, Coeff>> dominant_terms(const Character& c) {
    std::vector<std::pair<Monomial, Coeff>> out;
    for (const auto& [m, coeff] : c.terms())
        if (is_dominant(m)) out.emplace_back(m, coeff);
    return out;
}

}  // namespace epschar
