#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nakcox/lgroup.hpp"

using namespace nakcox;

static LElement el(const WeightTriple& w, i64 a1, i64 a2, i64 a3, i64 a) {
    return normalize(w, a1, a2, a3, a);
}

TEST_CASE("weight triple validation") {
    CHECK_THROWS_AS(WeightTriple(1, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(WeightTriple(2, 0, 5), std::invalid_argument);
    WeightTriple w(2, 3, 5);
    CHECK(w.p(1) == 2);
    CHECK(w.p(3) == 5);
    CHECK(w.lcm() == 30);
    CHECK(WeightTriple(2, 4, 6).lcm() == 12);
}

TEST_CASE("normal form of omega, hand checked") {
    // omega = c - x1 - x2 - x3 always normalizes to (p1-1, p2-1, p3-1, -2)
    struct Row {
        long p1, p2, p3;
        long l1, l2, l3;
        i64 l;
    };
    const Row rows[] = {
        {2, 4, 5, 1, 3, 4, -2},
        {2, 3, 5, 1, 2, 4, -2},
        {2, 3, 7, 1, 2, 6, -2},
        {2, 4, 7, 1, 3, 6, -2},
    };
    for (const Row& t : rows) {
        WeightTriple w(t.p1, t.p2, t.p3);
        LElement om = omega(w);
        CHECK(om.l1 == t.l1);
        CHECK(om.l2 == t.l2);
        CHECK(om.l3 == t.l3);
        CHECK(om.l == t.l);
        CHECK(om == el(w, -1, -1, -1, 1));
    }
}

TEST_CASE("normalize carries floor, not truncation") {
    WeightTriple w(2, 4, 7);
    // (x2 + 2*x3) - omega = -x1 + ... carries through negative coordinates
    LElement v = sub(add(xgen(w, 2), mul(2, xgen(w, 3))), omega(w));
    CHECK(v == el(w, 1, 2, 3, -1));
    CHECK(to_string(v) == "(1,2,3,-1)");
}

TEST_CASE("group laws and delta additivity over a window") {
    for (WeightTriple w : {WeightTriple(2, 3, 5), WeightTriple(2, 4, 7), WeightTriple(3, 4, 5)}) {
        std::vector<LElement> xs;
        for (i64 a1 = -2; a1 <= 2; ++a1)
            for (i64 a2 = -2; a2 <= 2; ++a2)
                for (i64 a3 = -2; a3 <= 2; ++a3) xs.push_back(el(w, a1, a2, a3, a1 - a3));
        for (size_t i = 0; i < xs.size(); i += 7)
            for (size_t j = 0; j < xs.size(); j += 11) {
                const LElement &x = xs[i], &y = xs[j];
                CHECK(add(x, y) == add(y, x));
                CHECK(sub(x, y) == add(x, neg(y)));
                CHECK(add(x, neg(x)) == zero(w));
                CHECK(delta(add(x, y)) == delta(x) + delta(y));
            }
        for (const LElement& x : xs) {
            CHECK(mul(3, x) == add(x, add(x, x)));
            CHECK(mul(-2, x) == neg(add(x, x)));
            // normal form is already normalized
            CHECK(normalize(w, x.l1, x.l2, x.l3, x.l) == x);
        }
    }
}

TEST_CASE("delta on generators") {
    WeightTriple w(2, 4, 5);
    CHECK(delta(xgen(w, 1)) == 10);
    CHECK(delta(xgen(w, 2)) == 5);
    CHECK(delta(xgen(w, 3)) == 4);
    CHECK(delta(cgen(w)) == 20);
    CHECK(delta(omega(w)) == 1);
    CHECK(delta(zero(w)) == 0);
}

TEST_CASE("order relation") {
    WeightTriple w(2, 3, 5);
    CHECK(is_nonneg(zero(w)));
    CHECK(is_nonneg(cgen(w)));
    CHECK(!is_nonneg(omega(w)));
    CHECK(!is_nonneg(neg(xgen(w, 2))));
    CHECK(leq(xgen(w, 3), cgen(w)));
    CHECK(!leq(cgen(w), xgen(w, 3)));
    // x >= 0 iff l >= 0 in normal form
    for (i64 a1 = -2; a1 <= 2; ++a1)
        for (i64 a2 = -3; a2 <= 3; ++a2)
            for (i64 a3 = -5; a3 <= 5; ++a3)
                for (i64 a = -2; a <= 2; ++a) {
                    LElement x = el(w, a1, a2, a3, a);
                    CHECK(is_nonneg(x) == (x.l >= 0));
                }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_char(WeightTriple(2, 3, 5)) == mpq_class(1, 30));
    CHECK(euler_char(WeightTriple(2, 3, 6)) == 0);
    CHECK(euler_char(WeightTriple(2, 4, 5)) == mpq_class(-1, 20));
    // chi = -delta(omega) / lcm
    for (WeightTriple w : {WeightTriple(2, 3, 7), WeightTriple(2, 5, 6), WeightTriple(3, 4, 5),
                           WeightTriple(2, 2, 2)}) {
        mpq_class lhs = euler_char(w);
        mpq_class rhs(long(-delta(omega(w))), long(w.lcm()));
        rhs.canonicalize();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("omega semigroup gap") {
    CHECK(omega_semigroup_gap(WeightTriple(2, 4, 5)) == 4);
    CHECK(omega_semigroup_gap(WeightTriple(2, 3, 7)) == 6);
    WeightTriple w245(2, 4, 5);
    CHECK(mul(4, omega(w245)) == xgen(w245, 3));
    // requires negative Euler characteristic
    CHECK_THROWS_AS(omega_semigroup_gap(WeightTriple(2, 3, 5)), std::logic_error);
    CHECK_THROWS_AS(omega_semigroup_gap(WeightTriple(2, 3, 6)), std::logic_error);
}

TEST_CASE("S-set membership, frozen lists") {
    WeightTriple w245(2, 4, 5);
    std::vector<LElement> s = sset(w245);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == zero(w245));
    CHECK(s[1] == xgen(w245, 2));

    WeightTriple w247(2, 4, 7);
    std::vector<LElement> t = sset(w247);
    REQUIRE(t.size() == 6);
    CHECK(t[0] == zero(w247));
    CHECK(t[1] == xgen(w247, 3));
    CHECK(t[2] == mul(2, xgen(w247, 3)));
    CHECK(t[3] == xgen(w247, 2));
    CHECK(t[4] == add(xgen(w247, 2), xgen(w247, 3)));
    CHECK(t[5] == add(xgen(w247, 2), mul(2, xgen(w247, 3))));
}

TEST_CASE("S-set defining property beyond the internal bound") {
    for (WeightTriple w : {WeightTriple(2, 4, 5), WeightTriple(2, 4, 7), WeightTriple(2, 5, 5),
                           WeightTriple(2, 5, 6)}) {
        std::vector<LElement> s = sset(w);
        long upper = omega_semigroup_gap(w) + 5;
        for (const LElement& x : s) {
            CHECK(is_nonneg(x));
            for (long n = 2; n <= upper; ++n)
                CHECK(leq(x, add(mul(n, omega(w)), cgen(w))));
        }
        // elements just outside stay outside: x + c never satisfies the bound
        for (const LElement& x : s) {
            LElement y = add(x, cgen(w));
            bool inside = true;
            for (long n = 2; n <= upper && inside; ++n)
                inside = leq(y, add(mul(n, omega(w)), cgen(w)));
            CHECK(!inside);
        }
    }
}

TEST_CASE("m_max and orbit representatives") {
    WeightTriple w245(2, 4, 5);
    CHECK(m_max(xgen(w245, 3)) == 4);
    WeightTriple w247(2, 4, 7);
    CHECK(m_max(add(xgen(w247, 2), mul(4, xgen(w247, 3)))) == 4);

    OrbitRep o = orbit_rep(add(xgen(w245, 2), mul(3, xgen(w245, 3))));
    CHECK(o.rep == xgen(w245, 2));
    CHECK(o.m == 12);

    // x = rep + m*omega and rep is omega-reduced
    for (i64 a2 = 0; a2 <= 3; ++a2)
        for (i64 a3 = 0; a3 <= 4; ++a3)
            for (i64 a = 0; a <= 2; ++a) {
                LElement x = el(w245, 0, a2, a3, a);
                OrbitRep r = orbit_rep(x);
                CHECK(add(r.rep, mul(r.m, omega(w245))) == x);
                CHECK(is_nonneg(r.rep));
                CHECK(!is_nonneg(sub(r.rep, omega(w245))));
            }
    // c = 20*omega in L(2,4,5), so -c lies in the orbit of zero
    CHECK(m_max(neg(cgen(w245))) == -20);
    OrbitRep oc = orbit_rep(neg(cgen(w245)));
    CHECK(oc.rep == zero(w245));
    CHECK(oc.m == -20);
}

TEST_CASE("orbit representative is omega equivariant") {
    for (WeightTriple w : {WeightTriple(2, 4, 5), WeightTriple(2, 3, 7)}) {
        LElement om = omega(w);
        for (i64 a2 = 0; a2 < w.p2; ++a2)
            for (i64 a3 = 0; a3 < w.p3; ++a3)
                for (i64 k = -10; k <= 10; ++k) {
                    LElement x = el(w, 0, a2, a3, 1);
                    OrbitRep base = orbit_rep(x);
                    OrbitRep shifted = orbit_rep(add(x, mul(k, om)));
                    CHECK(shifted.rep == base.rep);
                    CHECK(shifted.m == base.m + k);
                }
    }
}

TEST_CASE("parse and print") {
    WeightTriple w(2, 4, 5);
    CHECK(parse_lelement(w, "-1*x1-1*x2-1*x3+1*c") == omega(w));
    CHECK(parse_lelement(w, "(-1,-1,-1,1)") == omega(w));
    CHECK(parse_lelement(w, "0") == zero(w));
    CHECK(parse_lelement(w, "c") == cgen(w));
    CHECK(parse_lelement(w, "x2+2*x3") == el(w, 0, 1, 2, 0));
    CHECK(parse_lelement(w, " 2*x2 - c ") == el(w, 0, 2, 0, -1));
    CHECK(to_string(omega(w)) == "(1,3,4,-2)");
    // round trip through the tuple form
    for (i64 a2 = -1; a2 <= 4; ++a2)
        for (i64 a = -2; a <= 2; ++a) {
            LElement x = el(w, 1, a2, 3, a);
            CHECK(parse_lelement(w, to_string(x)) == x);
        }
    CHECK_THROWS_AS(parse_lelement(w, "x4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lelement(w, "2x+1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lelement(w, "(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lelement(w, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_lelement(w, "3"), std::invalid_argument);
}
