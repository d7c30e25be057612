#pragma once
// L(p1,p2,p3): rank-one abelian group on generators x1, x2, x3, c with the
// relations p_i*x_i = c.  Every element has a unique normal form
//     x = l1*x1 + l2*x2 + l3*x3 + l*c,   0 <= l_i < p_i,  l in Z,
// and x >= 0 holds iff l >= 0 in normal form.  Elements remember their weight
// triple; mixing elements of different triples is a hard error.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nakcox {

using i64 = long long;

struct WeightTriple {
    long p1, p2, p3;

    WeightTriple(long q1, long q2, long q3) : p1(q1), p2(q2), p3(q3) {
        if (q1 < 2 || q2 < 2 || q3 < 2)
            throw std::invalid_argument("weights must all be >= 2");
    }
    long p(int i) const {
        switch (i) {
            case 1: return p1;
            case 2: return p2;
            case 3: return p3;
        }
        throw std::logic_error("weight index out of range");
    }
    i64 lcm() const;
    bool operator==(const WeightTriple&) const = default;
};

struct LElement {
    WeightTriple w;
    long l1, l2, l3;  // 0 <= l_i < p_i
    i64 l;

    long li(int i) const {
        switch (i) {
            case 1: return l1;
            case 2: return l2;
            case 3: return l3;
        }
        throw std::logic_error("coordinate index out of range");
    }
    // total order key (weights fixed); used for deterministic containers
    std::array<i64, 4> key() const { return {l1, l2, l3, l}; }
    bool operator==(const LElement&) const = default;
};

// normal form of a1*x1 + a2*x2 + a3*x3 + a*c
LElement normalize(const WeightTriple& w, i64 a1, i64 a2, i64 a3, i64 a);

LElement zero(const WeightTriple& w);
LElement xgen(const WeightTriple& w, int i);
LElement cgen(const WeightTriple& w);
LElement omega(const WeightTriple& w);  // c - x1 - x2 - x3

LElement add(const LElement& x, const LElement& y);
LElement sub(const LElement& x, const LElement& y);
LElement neg(const LElement& x);
LElement mul(i64 k, const LElement& x);

// degree homomorphism: delta(x_i) = p/p_i, delta(c) = p, p = lcm(p1,p2,p3)
i64 delta(const LElement& x);
bool is_nonneg(const LElement& x);
bool leq(const LElement& x, const LElement& y);  // x <= y, i.e. y - x >= 0

// 2 - sum_i (1 - 1/p_i), exact
mpq_class euler_char(const WeightTriple& w);

// smallest k > 0 with k*omega >= 0; requires euler_char < 0
long omega_semigroup_gap(const WeightTriple& w);

// S = { x : 0 <= x <= n*omega + c for all n >= 2 }, finite for euler_char < 0;
// sorted lexicographically on the normal form (l1,l2,l3,l)
std::vector<LElement> sset(const WeightTriple& w);

// largest m with x - m*omega >= 0; requires euler_char < 0
i64 m_max(const LElement& x);

struct OrbitRep {
    LElement rep;
    i64 m;  // x = rep + m*omega
};
// representative of the omega-orbit of x inside S (rep = x - m_max(x)*omega)
OrbitRep orbit_rep(const LElement& x);

// text syntax: "a1*x1+a2*x2+a3*x3+a*c" (any subset of terms, signs allowed,
// coefficient 1 may be omitted) or a raw tuple "(a1,a2,a3,a)"
LElement parse_lelement(const WeightTriple& w, const std::string& text);
std::string to_string(const LElement& x);  // normal form "(l1,l2,l3,l)"

}  // namespace nakcox
