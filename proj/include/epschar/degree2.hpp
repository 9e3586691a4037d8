#pragma once

// Characters of simple modules whose highest weight is a product of two
// Y-variables. The pair is first normalized so the second spectral index
// falls in the admissible window above the first; the character is then the
// two-path sum minus a correction, which is itself a combination of
// lower-degree characters attached to path translations. The correction
// recurses through this module, so results are memoized.

#include <iostream>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "core.hpp"
#include "paths.hpp"
#include "snake.hpp"

namespace epschar {

struct NormalizedPair {
    int i;
    int k;     // anchor spectral, reduced into [0, 2*ell)
    int j;
    int vbar;  // window representative: h0(i,j)+k <= vbar < h0(i,j)+k+2*ell
    bool swapped;
};

// One admissible translation of the anchor rectangle: its spectral target
// kprime and the dominant degree-two monomial Y[a,alpha]*Y[b,beta] it
// produces. Node values 0 and n+1 encode trivial factors; alpha and beta
// are kept unreduced.
struct TranslationTarget {
    int t;  // 1-based position in the ascending kprime list
    int kprime;
    int a, alpha;
    int b, beta;
};

enum class CorrectionCase { Empty, BelowPeriod, ExactPeriodMultiple, BetweenPeriodMultiples };

struct CorrectionPlan {
    CorrectionCase kase;
    int rho;
    int gamma;
    int bprime;
    std::vector<TranslationTarget> targets;
    // One entry per target index 1..bprime; disengaged only if a shifted
    // node left the board, which the window bounds rule out.
    std::vector<std::optional<Monomial>> second_stage;
};

// Puts an unordered parity-matched pair into normal form: equal variables
// re-anchor the second copy one period up, roles swap so the smaller
// spectral index leads, the anchor index reduces into [0, 2*ell), and the
// second index moves into the window [h0+k, h0+k+2*ell).
inline NormalizedPair normalize_small_values(int i, int k, int j, int v,
                                             const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("normalize_small_values: requires root-of-unity mode");
    check_node_range(i, cfg, "normalize_small_values");
    check_node_range(j, cfg, "normalize_small_values");
    if (((std::abs(j - i) - std::abs(k - v)) % 2 + 2) % 2 != 0)
        throw domain_error("normalize_small_values: node and spectral gaps have opposite parity");
    int kr = canonical_index(k, cfg);
    int vr = canonical_index(v, cfg);
    bool swapped = false;
    if (i == j && kr == vr) {
        vr = kr + cfg.period();  // squared variable: separate the copies first
    } else if (vr < kr || (vr == kr && j < i)) {
        std::swap(i, j);
        std::swap(kr, vr);
        swapped = true;
    }
    int lo = kr + h0(i, j);
    int vbar = lo + ((vr - lo) % cfg.period() + cfg.period()) % cfg.period();
    return NormalizedPair{i, kr, j, vbar, swapped};
}

// Translations of the anchor rectangle of a normalized pair: spectral
// values kprime congruent to k that land in the prime window above
// (j, vbar), ascending. Each yields a dominant monomial with
// r = (kprime - vbar - h0(i,j))/2 + 1 node steps outward.
inline std::vector<TranslationTarget> translation_targets(const NormalizedPair& np,
                                                          const LatticeConfig& cfg) {
    std::vector<TranslationTarget> out;
    int t = 0;
    for (int kprime : prime_snake_window(np.j, np.vbar, np.i, cfg)) {
        if ((kprime - np.k) % cfg.period() != 0) continue;
        int r = (kprime - np.vbar - h0(np.i, np.j)) / 2 + 1;
        TranslationTarget tt;
        tt.t = ++t;
        tt.kprime = kprime;
        if (np.i <= np.j) {
            tt.a = np.i - r;
            tt.alpha = kprime - r;
            tt.b = np.j + r;
            tt.beta = np.vbar + r;
        } else {
            tt.a = np.j - r;
            tt.alpha = np.vbar + r;
            tt.b = np.i + r;
            tt.beta = kprime - r;
        }
        out.push_back(tt);
    }
    return out;
}

inline Monomial target_monomial(const TranslationTarget& tt, const LatticeConfig& cfg) {
    Monomial m;
    m.accumulate(tt.a, tt.alpha, +1, cfg);
    m.accumulate(tt.b, tt.beta, +1, cfg);
    return m;
}

namespace detail {

// Exact quotient of a cpp_int product by a factorial; the division must be
// exact, anything else is a bug in the correction tables.
inline Coeff exact_quotient(const Coeff& num, const Coeff& den, const char* who) {
    if (num % den != 0)
        throw internal_error(std::string(who) + ": non-integral coefficient");
    return num / den;
}

inline Coeff factorial(int t) {
    Coeff f = 1;
    for (int s = 2; s <= t; ++s) f *= s;
    return f;
}

}  // namespace detail

// First correction coefficient family: e(t) = prod_{s=1}^{t-2}(t+s)/(t-1)!
// (1, 1, 2, 5, 14, ...).
inline Coeff coeff_e(int t) {
    if (t < 1) throw domain_error("coeff_e: t must be >= 1");
    Coeff num = 1;
    for (int s = 1; s <= t - 2; ++s) num *= t + s;
    return detail::exact_quotient(num, detail::factorial(t - 1), "coeff_e");
}

// Second family: f(t) = rho*prod_{s=1}^{t-1}(rho+t+s)/t!.
inline Coeff coeff_f(int rho, int t) {
    if (t < 1) throw domain_error("coeff_f: t must be >= 1");
    Coeff num = rho;
    for (int s = 1; s <= t - 1; ++s) num *= rho + t + s;
    return detail::exact_quotient(num, detail::factorial(t), "coeff_f");
}

// Third family: g(t) = (rho+1)*prod_{s=2}^{t}(rho+t+s)/t!, with g(0) = 1 by
// convention.
inline Coeff coeff_g(int rho, int t) {
    if (t < 0) throw domain_error("coeff_g: t must be >= 0");
    if (t == 0) return 1;
    Coeff num = rho + 1;
    for (int s = 2; s <= t; ++s) num *= rho + t + s;
    return detail::exact_quotient(num, detail::factorial(t), "coeff_g");
}

struct CorrectionCoefficients {
    Coeff e, f, g;
};

inline CorrectionCoefficients coefficients(int rho, int t) {
    return CorrectionCoefficients{coeff_e(t), coeff_f(rho, t), coeff_g(rho, t)};
}

namespace detail {

inline Character degree2_char_impl(int i, int k, int j, int v, const LatticeConfig& cfg,
                                   int depth);

// Character of a dominant monomial with at most two non-boundary factors.
inline Character chi_of_degree2_monomial(int a, int alpha, int b, int beta,
                                         const LatticeConfig& cfg, int depth) {
    bool a_real = a >= 1 && a <= cfg.n;
    bool b_real = b >= 1 && b <= cfg.n;
    if (a_real && b_real) return degree2_char_impl(a, alpha, b, beta, cfg, depth);
    if (a_real) return fundamental_eps_character(a, alpha, cfg);
    if (b_real) return fundamental_eps_character(b, beta, cfg);
    return Character::of(Monomial::unit());
}

}  // namespace detail

// Builds the correction recipe for a normalized pair without evaluating any
// characters: the case split on D = |j-i| + (vbar-k), the coefficient
// parameters rho and gamma, the translation targets, and the second-stage
// monomials with their cutoff bprime.
inline CorrectionPlan correction_plan(const NormalizedPair& np, const LatticeConfig& cfg) {
    CorrectionPlan plan;
    plan.targets = translation_targets(np, cfg);
    plan.rho = 0;
    plan.gamma = 0;
    plan.bprime = 0;
    if (plan.targets.empty()) {
        plan.kase = CorrectionCase::Empty;
        return plan;
    }
    const int D = std::abs(np.j - np.i) + (np.vbar - np.k);
    if (D % 2 != 0) throw internal_error("correction_plan: odd node+spectral spread");
    if (D < cfg.period()) {
        plan.kase = CorrectionCase::BelowPeriod;
        return plan;
    }
    plan.rho = D / cfg.period();
    if (D % cfg.period() == 0) {
        plan.kase = CorrectionCase::ExactPeriodMultiple;
        return plan;
    }
    plan.kase = CorrectionCase::BetweenPeriodMultiples;
    plan.gamma = (D % cfg.period()) / 2;
    const int r = static_cast<int>(plan.targets.size());
    const TranslationTarget& last = plan.targets.back();
    plan.bprime =
        (last.a - plan.gamma >= 0 && last.b + plan.gamma <= cfg.n + 1) ? r : r - 1;
    for (int t = 1; t <= plan.bprime; ++t) {
        const TranslationTarget& tt = plan.targets[t - 1];
        if (tt.a - plan.gamma < 0 || tt.b + plan.gamma > cfg.n + 1) {
            std::cerr << "correction_plan: second-stage node off the board at t=" << t << " of "
                      << r << " (expected impossible); term skipped\n";
            plan.second_stage.push_back(std::nullopt);
            continue;
        }
        Monomial m;
        if (np.i <= np.j) {
            // move the first spectral index into the window above the second
            int lo = tt.beta + h0(tt.a, tt.b);
            int abar = lo + ((tt.alpha - lo) % cfg.period() + cfg.period()) % cfg.period();
            m.accumulate(tt.a - plan.gamma, abar - plan.gamma, +1, cfg);
            m.accumulate(tt.b + plan.gamma, tt.beta + plan.gamma, +1, cfg);
        } else {
            int lo = tt.alpha + h0(tt.a, tt.b);
            int bbar = lo + ((tt.beta - lo) % cfg.period() + cfg.period()) % cfg.period();
            m.accumulate(tt.a - plan.gamma, tt.alpha + plan.gamma, +1, cfg);
            m.accumulate(tt.b + plan.gamma, bbar - plan.gamma, +1, cfg);
        }
        plan.second_stage.push_back(m);
    }
    return plan;
}

namespace detail {

inline Character chi_of_monomial_pair(const Monomial& m, const LatticeConfig& cfg, int depth) {
    std::vector<std::pair<VarKey, int>> fs(m.factors().begin(), m.factors().end());
    int degree = 0;
    for (auto& [key, e] : fs) degree += e;
    if (degree == 0) return Character::of(Monomial::unit());
    if (degree == 1) return fundamental_eps_character(fs[0].first.node, fs[0].first.spectral, cfg);
    if (degree == 2) {
        if (fs.size() == 1)
            return degree2_char_impl(fs[0].first.node, fs[0].first.spectral, fs[0].first.node,
                                     fs[0].first.spectral, cfg, depth);
        return degree2_char_impl(fs[0].first.node, fs[0].first.spectral, fs[1].first.node,
                                 fs[1].first.spectral, cfg, depth);
    }
    throw internal_error("chi_of_monomial_pair: degree exceeds two");
}

}  // namespace detail

// The correction subtracted from the two-path sum of a normalized pair.
// Zero when there are no translations; otherwise a coefficient-weighted sum
// of lower characters, with an extra second-stage layer when D falls
// strictly between multiples of the period. Recursion deeper than n+2
// levels cannot happen for a correct table and is reported as a hard error.
inline Character chi_correction(const NormalizedPair& np, const LatticeConfig& cfg,
                                int depth = 0) {
    if (depth > cfg.n + 2)
        throw internal_error("chi_correction: recursion exceeded depth " +
                             std::to_string(cfg.n + 2) + "; correction tables do not terminate");
    CorrectionPlan plan = correction_plan(np, cfg);
    Character corr;
    switch (plan.kase) {
        case CorrectionCase::Empty:
            break;
        case CorrectionCase::BelowPeriod:
            for (const TranslationTarget& tt : plan.targets)
                corr = char_add(corr, char_scale(detail::chi_of_degree2_monomial(
                                                     tt.a, tt.alpha, tt.b, tt.beta, cfg, depth + 1),
                                                 coeff_e(tt.t)));
            break;
        case CorrectionCase::ExactPeriodMultiple:
            for (const TranslationTarget& tt : plan.targets)
                corr = char_add(corr, char_scale(detail::chi_of_degree2_monomial(
                                                     tt.a, tt.alpha, tt.b, tt.beta, cfg, depth + 1),
                                                 coeff_f(plan.rho, tt.t)));
            break;
        case CorrectionCase::BetweenPeriodMultiples:
            for (int t = 1; t <= plan.bprime; ++t) {
                if (!plan.second_stage[t - 1]) continue;
                corr = char_add(
                    corr, char_scale(detail::chi_of_monomial_pair(*plan.second_stage[t - 1], cfg,
                                                                  depth + 1),
                                     coeff_f(plan.rho, t)));
            }
            for (const TranslationTarget& tt : plan.targets)
                corr = char_add(corr, char_scale(detail::chi_of_degree2_monomial(
                                                     tt.a, tt.alpha, tt.b, tt.beta, cfg, depth + 1),
                                                 coeff_g(plan.rho, tt.t - 1)));
            break;
    }
    return corr;
}

namespace detail {

struct Degree2Memo {
    std::mutex mu;
    std::map<std::tuple<int, int, int, int, int, int>, Character> table;
};

inline Degree2Memo& degree2_memo() {
    static Degree2Memo memo;
    return memo;
}

inline Character degree2_char_impl(int i, int k, int j, int v, const LatticeConfig& cfg,
                                   int depth) {
    check_node_range(i, cfg, "degree2_char");
    check_node_range(j, cfg, "degree2_char");
    if (((std::abs(j - i) + std::abs(k - v)) % 2 + 2) % 2 != 0) {
        // opposite parity: the module factors into its two fundamentals
        return char_mul(fundamental_eps_character(i, k, cfg),
                        fundamental_eps_character(j, v, cfg), cfg);
    }
    NormalizedPair np = normalize_small_values(i, k, j, v, cfg);
    auto key = std::make_tuple(cfg.n, cfg.ell, np.i, np.k, np.j, np.vbar);
    Degree2Memo& memo = degree2_memo();
    {
        std::lock_guard<std::mutex> lock(memo.mu);
        auto it = memo.table.find(key);
        if (it != memo.table.end()) return it->second;
    }
    Character s = tuple_sum_nonoverlapping({{np.i, np.k}, {np.j, np.vbar}}, cfg);
    Character result = char_sub(s, chi_correction(np, cfg, depth));
    std::lock_guard<std::mutex> lock(memo.mu);
    return memo.table.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

// Character of the simple module with highest weight Y[i,k]*Y[j,v]. When the
// node gap and spectral gap have opposite parity this is the plain product
// of fundamental characters; otherwise it is the normalized two-path sum
// minus chi_correction. Memoized, since corrections recurse into shared
// subproblems.
inline Character degree2_char(int i, int k, int j, int v, const LatticeConfig& cfg) {
    if (!cfg.root_of_unity()) throw domain_error("degree2_char: requires root-of-unity mode");
    return detail::degree2_char_impl(i, k, j, v, cfg, 0);
}

// Diagnostic mirror of the downward translation family: for an unnormalized
// pair with spectral distance at least h0 + 2*ell, lists the dominant
// monomials produced by translating the second rectangle downward into the
// prime window of the first. Returns an empty list when the premise fails.
inline std::vector<Monomial> type1_translation_dominants(int i, int k, int j, int v,
                                                         const LatticeConfig& cfg) {
    if (!cfg.root_of_unity())
        throw domain_error("type1_translation_dominants: requires root-of-unity mode");
    check_node_range(i, cfg, "type1_translation_dominants");
    check_node_range(j, cfg, "type1_translation_dominants");
    std::vector<Monomial> out;
    if (v <= k) return out;
    int dist = v - k;
    if (((std::abs(j - i) - dist) % 2 + 2) % 2 != 0) return out;
    if (dist < h0(i, j) + cfg.period()) return out;
    for (int vprime : prime_snake_window(i, k, j, cfg)) {
        if (vprime >= v || (v - vprime) % cfg.period() != 0) continue;
        int r = (vprime - k - h0(i, j)) / 2 + 1;
        Monomial m;
        if (i <= j) {
            m.accumulate(i - r, k + r, +1, cfg);
            m.accumulate(j + r, vprime - r, +1, cfg);
        } else {
            m.accumulate(j - r, vprime - r, +1, cfg);
            m.accumulate(i + r, k + r, +1, cfg);
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace epschar
