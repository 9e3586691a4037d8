#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <epschar/krfrob.hpp>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace epschar;

namespace {

// chi of L(Y[2,1]*Y[2,3]*Y[2,5]) for n=3, ell=3, frozen term by term
const char* kTubeSix =
    "Y[2,1]*Y[2,3]*Y[2,5]"
    " + Y[1,0]*Y[1,2]*Y[1,4]*Y[2,1]^-1*Y[2,3]^-1*Y[2,5]^-1*Y[3,0]*Y[3,2]*Y[3,4]"
    " + Y[2,1]^-1*Y[2,3]^-1*Y[2,5]^-1"
    " + Y[1,0]*Y[1,2]*Y[1,4]*Y[3,0]^-1*Y[3,2]^-1*Y[3,4]^-1"
    " + Y[1,0]^-1*Y[1,2]^-1*Y[1,4]^-1*Y[3,0]*Y[3,2]*Y[3,4]"
    " + Y[1,0]^-1*Y[1,2]^-1*Y[1,4]^-1*Y[2,1]*Y[2,3]*Y[2,5]*Y[3,0]^-1*Y[3,2]^-1*Y[3,4]^-1";

Coeff weight_poly_size(const WeightPoly& p) {
    Coeff s = 0;
    for (const auto& [expo, c] : p) s += c;
    return s;
}

bool within_tube_bound(int n, int ell, int i, int z) {
    return 2 * (z - 1) + 2 * std::min(i, n + 1 - i) < 2 * ell;
}

Monomial kr_top(int i, int k, int z, const LatticeConfig& cfg) {
    Monomial m;
    for (int t = 0; t < z; ++t) m.accumulate(i, k + 2 * t, +1, cfg);
    return m;
}

}  // namespace

TEST_CASE("tube characters match the frozen six-term example", "[krfrob]") {
    LatticeConfig cfg(3, 3);
    Character c = kr_char(2, 1, 3, cfg);
    CHECK(c == parse_character(kTubeSix, cfg));
    CHECK(c.term_count() == 6);
    CHECK(dimension(c) == 6);
}

TEST_CASE("length-one runs are fundamental characters", "[krfrob]") {
    for (int n = 1; n <= 4; ++n)
        for (int ell : {2, 3}) {
            LatticeConfig cfg(n, ell);
            for (int i = 1; i <= n; ++i)
                for (int k : {0, 1, 3})
                    CHECK(kr_char(i, k, 1, cfg) == fundamental_eps_character(i, k, cfg));
        }
}

TEST_CASE("length-two runs agree with the degree-two engine", "[krfrob]") {
    for (int n = 1; n <= 4; ++n)
        for (int ell : {2, 3}) {
            LatticeConfig cfg(n, ell);
            for (int i = 1; i <= n; ++i)
                for (int k : {0, 1})
                    CHECK(kr_char(i, k, 2, cfg) == degree2_char(i, k, i, k + 2, cfg));
        }
}

TEST_CASE("run characters validate their arguments", "[krfrob]") {
    LatticeConfig cfg(3, 2);
    CHECK_THROWS_AS(kr_char(2, 1, 0, cfg), domain_error);
    CHECK_THROWS_AS(kr_char(2, 1, 3, cfg), domain_error);
    CHECK_THROWS_AS(kr_char(0, 1, 1, cfg), domain_error);
    LatticeConfig gen(3, 2, Mode::GenericQ);
    CHECK_THROWS_AS(kr_char(2, 1, 1, gen), domain_error);
}

TEST_CASE("run characters are special with positive coefficients", "[krfrob]") {
    for (int n = 1; n <= 4; ++n)
        for (int ell : {2, 3}) {
            LatticeConfig cfg(n, ell);
            for (int i = 1; i <= n; ++i)
                for (int k = 0; k < cfg.period(); ++k)
                    for (int z = 1; z <= ell; ++z) {
                        Character c = kr_char(i, k, z, cfg);
                        for (const auto& [m, coeff] : c.terms()) CHECK(coeff > 0);
                        auto doms = dominant_terms(c);
                        REQUIRE(doms.size() == 1);
                        CHECK(doms[0].first == kr_top(i, k, z, cfg));
                        CHECK(doms[0].second == 1);
                    }
        }
}

TEST_CASE("run characters only see spectral indices modulo the period", "[krfrob]") {
    LatticeConfig cfg(3, 3);
    CHECK(kr_char(2, 1, 3, cfg) == kr_char(2, 7, 3, cfg));
    CHECK(kr_char(1, 0, 2, cfg) == kr_char(1, -6, 2, cfg));
}

TEST_CASE("tube and plane sums coincide exactly under the width bound", "[krfrob]") {
    for (int n = 1; n <= 4; ++n)
        for (int ell : {2, 3}) {
            LatticeConfig cfg(n, ell);
            for (int i = 1; i <= n; ++i)
                for (int k : {0, 1})
                    for (int z = 2; z <= ell; ++z) {
                        std::vector<std::pair<int, int>> pts;
                        for (int t = 0; t < z; ++t) pts.emplace_back(i, k + 2 * t);
                        Character tube = tuple_sum_tube_disjoint(pts, cfg);
                        Character plane = tuple_sum_nonoverlapping(pts, cfg);
                        if (within_tube_bound(n, ell, i, z)) {
                            CHECK(tube == plane);
                        } else {
                            // a translation then exists, so the planar sum picks
                            // up at least one dominant monomial beyond the top
                            CHECK(dominant_terms(plane).size() >= 2);
                        }
                    }
        }
}

TEST_CASE("long runs split into an orbit power and a remainder", "[krfrob]") {
    LatticeConfig cfg(3, 3);
    Character z4 = kr_char_general(2, 1, 4, cfg);
    CHECK(z4 == char_mul(kr_char(2, 1, 3, cfg), kr_char(2, 1, 1, cfg), cfg));

    // z below the period is forwarded unchanged
    CHECK(kr_char_general(2, 1, 2, cfg) == kr_char(2, 1, 2, cfg));

    CHECK_THROWS_AS(kr_char_general(2, 1, 0, cfg), domain_error);
    LatticeConfig gen(3, 3, Mode::GenericQ);
    CHECK_THROWS_AS(kr_char_general(2, 1, 1, gen), domain_error);
}

TEST_CASE("full-orbit runs equal the classical pullback", "[krfrob]") {
    for (int n = 1; n <= 3; ++n)
        for (int ell : {2, 3}) {
            LatticeConfig cfg(n, ell);
            for (int i = 1; i <= n; ++i)
                for (int c : {0, 1}) {
                    BoldMonomial bold(cfg);
                    bold.mult[i] = 1;
                    bold.parity[i] = c;
                    CHECK(frobenius_pullback(bold, cfg) == kr_char(i, c, ell, cfg));
                    CHECK(kr_char_general(i, c, ell, cfg) == kr_char(i, c, ell, cfg));
                }
        }
}

TEST_CASE("orbit squares use the classical weight, not the square", "[krfrob]") {
    LatticeConfig cfg(1, 2);
    BoldMonomial two(cfg);
    two.mult[1] = 2;
    two.parity[1] = 0;
    Character sq = frobenius_pullback(two, cfg);
    CHECK(sq == parse_character("Y[1,0]^2*Y[1,2]^2 + 1 + Y[1,0]^-2*Y[1,2]^-2", cfg));
    CHECK(kr_char_general(1, 0, 4, cfg) == sq);
    // two full orbits followed by a remainder of one
    CHECK(kr_char_general(1, 0, 5, cfg) ==
          char_mul(sq, fundamental_eps_character(1, 0, cfg), cfg));
}

TEST_CASE("classical characters by tableau enumeration", "[krfrob]") {
    LatticeConfig n1(1, 2);
    ClassicalWeight w1(n1);
    w1.c[1] = 1;
    WeightPoly p1 = classical_character(w1, n1);
    REQUIRE(p1.size() == 2);
    CHECK(p1.at({0, 1}) == 1);
    CHECK(p1.at({0, -1}) == 1);

    w1.c[1] = 2;
    WeightPoly p2 = classical_character(w1, n1);
    REQUIRE(p2.size() == 3);
    CHECK(p2.at({0, 2}) == 1);
    CHECK(p2.at({0, 0}) == 1);
    CHECK(p2.at({0, -2}) == 1);

    LatticeConfig n2(2, 2);
    ClassicalWeight w2(n2);
    w2.c[2] = 1;
    WeightPoly p3 = classical_character(w2, n2);
    REQUIRE(p3.size() == 3);
    CHECK(p3.at({0, 0, 1}) == 1);
    CHECK(p3.at({0, 1, -1}) == 1);
    CHECK(p3.at({0, -1, 0}) == 1);

    // adjoint weight of rank two: eight tableaux, with a doubled zero weight
    ClassicalWeight w3(n2);
    w3.c[1] = 1;
    w3.c[2] = 1;
    WeightPoly p4 = classical_character(w3, n2);
    CHECK(weight_poly_size(p4) == 8);
    CHECK(p4.at({0, 0, 0}) == 2);
    CHECK(weight_poly_size(p4) == Coeff(oracle::hook_content_dimension({2, 1}, 3)));

    LatticeConfig n3(3, 2);
    ClassicalWeight w4(n3);
    w4.c[2] = 2;
    CHECK(weight_poly_size(classical_character(w4, n3)) ==
          Coeff(oracle::hook_content_dimension({2, 2}, 4)));

    // the trivial weight gives the trivial character
    ClassicalWeight w0(n2);
    WeightPoly p0 = classical_character(w0, n2);
    REQUIRE(p0.size() == 1);
    CHECK(p0.at({0, 0, 0}) == 1);

    ClassicalWeight bad(n1);
    bad.c.push_back(1);  // forged rank-two weight against a rank-one board
    CHECK_THROWS_AS(classical_character(bad, n1), domain_error);
}

TEST_CASE("orbit part extraction and its round trip", "[krfrob]") {
    LatticeConfig cfg(1, 2);
    auto [rest, bold] = acyclic_factor(parse_monomial("Y[1,0]^2*Y[1,2]", cfg), cfg);
    CHECK(bold.mult[1] == 1);
    CHECK(bold.parity[1] == 0);
    CHECK(rest == parse_monomial("Y[1,0]", cfg));
    CHECK(mono_mul(rest, bold.expansion(cfg), cfg) == parse_monomial("Y[1,0]^2*Y[1,2]", cfg));

    auto [rest2, bold2] = acyclic_factor(parse_monomial("Y[1,0]", cfg), cfg);
    CHECK(bold2.is_trivial());
    CHECK(rest2 == parse_monomial("Y[1,0]", cfg));

    CHECK_THROWS_AS(acyclic_factor(parse_monomial("Y[1,0]^-1", cfg), cfg), domain_error);
    LatticeConfig n2(2, 2);
    CHECK_THROWS_AS(acyclic_factor(parse_monomial("Y[1,0]*Y[1,1]", n2), n2), domain_error);
    LatticeConfig gen(1, 2, Mode::GenericQ);
    CHECK_THROWS_AS(acyclic_factor(parse_monomial("Y[1,0]", gen), gen), domain_error);
}

TEST_CASE("orbit extraction on random dominant monomials", "[krfrob]") {
    for (int n = 1; n <= 4; ++n)
        for (int ell : {2, 3}) {
            LatticeConfig cfg(n, ell);
            for (int trial = 0; trial < 60; ++trial) {
                Monomial m;
                std::vector<int> node_parity(n + 1);
                for (int i = 1; i <= n; ++i) node_parity[i] = support::rand_int(0, 1);
                int nodes = support::rand_int(1, n);
                for (int u = 0; u < nodes; ++u) {
                    int i = support::rand_int(1, n);
                    int picks = support::rand_int(1, 2 * ell);
                    for (int d = 0; d < picks; ++d)
                        m.accumulate(i, node_parity[i] + 2 * support::rand_int(0, ell - 1), +1,
                                     cfg);
                }
                auto [rest, bold] = acyclic_factor(m, cfg);
                CHECK(mono_mul(rest, bold.expansion(cfg), cfg) == m);
                CHECK(is_dominant(rest));
                // per node, the leftover misses at least one orbit residue
                for (int i = 1; i <= n; ++i) {
                    bool full = true;
                    for (int j = 0; j < ell; ++j) {
                        VarKey key{i, canonical_index(bold.parity[i] + 2 * j, cfg)};
                        if (rest.factors().find(key) == rest.factors().end()) full = false;
                    }
                    CHECK_FALSE(full);
                }
            }
        }
}

TEST_CASE("general characters route each residual family", "[krfrob]") {
    LatticeConfig tiny(1, 2);
    CHECK(full_char(parse_monomial("Y[1,0]*Y[1,2]", tiny), tiny) ==
          degree2_char(1, 0, 1, 2, tiny));
    CHECK(full_char(Monomial::unit(), tiny) == Character::of(Monomial::unit()));

    LatticeConfig mid(3, 2);
    CHECK(full_char(parse_monomial("Y[2,1]", mid), mid) == fundamental_eps_character(2, 1, mid));
    CHECK(full_char(parse_monomial("Y[1,0]*Y[3,0]", mid), mid) == degree2_char(1, 0, 3, 0, mid));
    CHECK(full_char(parse_monomial("Y[2,1]^2", mid), mid) == degree2_char(2, 1, 2, 1, mid));

    // a full orbit times a leftover variable
    CHECK(full_char(parse_monomial("Y[1,0]^2*Y[1,2]", tiny), tiny) ==
          char_mul(frobenius_pullback(acyclic_factor(parse_monomial("Y[1,0]*Y[1,2]", tiny), tiny)
                                          .second,
                                      tiny),
                   fundamental_eps_character(1, 0, tiny), tiny));

    LatticeConfig deep(2, 4);
    CHECK(full_char(parse_monomial("Y[1,0]*Y[1,2]*Y[1,4]", deep), deep) ==
          kr_char(1, 0, 3, deep));
    // the run may wrap around the residue cycle; the anchor is the arc start
    CHECK(full_char(parse_monomial("Y[1,0]*Y[1,4]*Y[1,6]", deep), deep) ==
          kr_char(1, 4, 3, deep));

    LatticeConfig five(1, 5);
    try {
        full_char(parse_monomial("Y[1,0]*Y[1,2]*Y[1,6]", five), five);
        FAIL("expected an unsupported-family error");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("Y[1,0]*Y[1,2]*Y[1,6]") != std::string::npos);
    }

    CHECK_THROWS_AS(full_char(parse_monomial("Y[1,0]^-1", tiny), tiny), domain_error);
    LatticeConfig gen(1, 2, Mode::GenericQ);
    CHECK_THROWS_AS(full_char(parse_monomial("Y[1,0]", gen), gen), domain_error);
}

TEST_CASE("pullback demands one spectral class", "[krfrob]") {
    LatticeConfig cfg(2, 2);
    BoldMonomial bold(cfg);
    bold.mult[1] = 1;
    bold.parity[1] = 0;
    bold.mult[2] = 1;
    bold.parity[2] = 0;  // same parity digit on adjacent nodes: opposite classes
    CHECK_THROWS_AS(frobenius_pullback(bold, cfg), domain_error);

    BoldMonomial ok(cfg);
    ok.mult[1] = 1;
    ok.parity[1] = 0;
    ok.mult[2] = 1;
    ok.parity[2] = 1;
    Character c = frobenius_pullback(ok, cfg);
    CHECK(dimension(c) == 8);

    BoldMonomial none(cfg);
    CHECK(frobenius_pullback(none, cfg) == Character::of(Monomial::unit()));
    LatticeConfig gen(2, 2, Mode::GenericQ);
    CHECK_THROWS_AS(frobenius_pullback(none, gen), domain_error);
}
