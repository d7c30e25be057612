#include "nakcox/lgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace nakcox {

namespace {

i64 floordiv(i64 a, i64 b) {
    // b > 0
    i64 q = a / b, r = a % b;
    return (r < 0) ? q - 1 : q;
}

void require_same_weights(const LElement& x, const LElement& y) {
    if (!(x.w == y.w))
        throw std::invalid_argument("mixing elements of different weight triples");
}

}  // namespace

i64 WeightTriple::lcm() const {
    i64 l = std::lcm((i64)p1, (i64)p2);
    return std::lcm(l, (i64)p3);
}

LElement normalize(const WeightTriple& w, i64 a1, i64 a2, i64 a3, i64 a) {
    i64 q1 = floordiv(a1, w.p1), q2 = floordiv(a2, w.p2), q3 = floordiv(a3, w.p3);
    return LElement{w,
                    (long)(a1 - q1 * w.p1),
                    (long)(a2 - q2 * w.p2),
                    (long)(a3 - q3 * w.p3),
                    a + q1 + q2 + q3};
}

LElement zero(const WeightTriple& w) { return LElement{w, 0, 0, 0, 0}; }

LElement xgen(const WeightTriple& w, int i) {
    switch (i) {
        case 1: return normalize(w, 1, 0, 0, 0);
        case 2: return normalize(w, 0, 1, 0, 0);
        case 3: return normalize(w, 0, 0, 1, 0);
    }
    throw std::invalid_argument("generator index must be 1, 2 or 3");
}

LElement cgen(const WeightTriple& w) { return LElement{w, 0, 0, 0, 1}; }

LElement omega(const WeightTriple& w) { return normalize(w, -1, -1, -1, 1); }

LElement add(const LElement& x, const LElement& y) {
    require_same_weights(x, y);
    return normalize(x.w, (i64)x.l1 + y.l1, (i64)x.l2 + y.l2, (i64)x.l3 + y.l3, x.l + y.l);
}

LElement sub(const LElement& x, const LElement& y) {
    require_same_weights(x, y);
    return normalize(x.w, (i64)x.l1 - y.l1, (i64)x.l2 - y.l2, (i64)x.l3 - y.l3, x.l - y.l);
}

LElement neg(const LElement& x) { return normalize(x.w, -(i64)x.l1, -(i64)x.l2, -(i64)x.l3, -x.l); }

LElement mul(i64 k, const LElement& x) {
    return normalize(x.w, k * x.l1, k * x.l2, k * x.l3, k * x.l);
}

i64 delta(const LElement& x) {
    i64 p = x.w.lcm();
    return x.l1 * (p / x.w.p1) + x.l2 * (p / x.w.p2) + x.l3 * (p / x.w.p3) + x.l * p;
}

bool is_nonneg(const LElement& x) { return x.l >= 0; }

bool leq(const LElement& x, const LElement& y) { return is_nonneg(sub(y, x)); }

mpq_class euler_char(const WeightTriple& w) {
    mpq_class chi = -1;
    chi += mpq_class(1, w.p1);
    chi += mpq_class(1, w.p2);
    chi += mpq_class(1, w.p3);
    chi.canonicalize();
    return chi;
}

long omega_semigroup_gap(const WeightTriple& w) {
    if (euler_char(w) >= 0)
        throw std::invalid_argument("omega_semigroup_gap requires euler_char < 0");
    LElement om = omega(w);
    i64 dom = delta(om);
    // k*omega >= 0 is guaranteed once k*delta(omega) exceeds 3*lcm, because the
    // normal-form carry is at most sum_i (p_i-1)*delta(x_i) < 3*lcm
    i64 cap = 3 * w.lcm() / dom + 2;
    for (i64 k = 1; k <= cap; ++k)
        if (is_nonneg(mul(k, om))) return (long)k;
    throw std::logic_error("omega semigroup gap not found within provable cap");
}

std::vector<LElement> sset(const WeightTriple& w) {
    if (euler_char(w) >= 0)
        throw std::invalid_argument("sset requires euler_char < 0");
    long ell = omega_semigroup_gap(w);
    LElement om = omega(w);
    LElement bound2 = add(mul(2, om), cgen(w));
    if (!is_nonneg(bound2)) return {};  // S is empty if even n = 2 excludes 0... keep general
    i64 lmax = delta(bound2) / w.lcm();
    std::vector<LElement> out;
    for (long a1 = 0; a1 < w.p1; ++a1)
        for (long a2 = 0; a2 < w.p2; ++a2)
            for (long a3 = 0; a3 < w.p3; ++a3)
                for (i64 l = 0; l <= lmax; ++l) {
                    LElement x{w, a1, a2, a3, l};
                    bool ok = true;
                    for (long n = 2; n <= 1 + ell && ok; ++n)
                        ok = leq(x, add(mul(n, om), cgen(w)));
                    if (ok) out.push_back(x);
                }
    std::sort(out.begin(), out.end(),
              [](const LElement& a, const LElement& b) { return a.key() < b.key(); });
    return out;
}

i64 m_max(const LElement& x) {
    const WeightTriple& w = x.w;
    if (euler_char(w) >= 0)
        throw std::invalid_argument("m_max requires euler_char < 0");
    LElement om = omega(w);
    i64 dom = delta(om);
    i64 m0 = floordiv(delta(x), dom);  // x - m*omega >= 0 forces delta(x) - m*delta(omega) >= 0
    i64 steps = 3 * w.lcm() / dom + 2;
    for (i64 m = m0; m >= m0 - steps; --m)
        if (is_nonneg(sub(x, mul(m, om)))) return m;
    throw std::logic_error("m_max not found within provable cap");
}

OrbitRep orbit_rep(const LElement& x) {
    i64 m = m_max(x);
    return OrbitRep{sub(x, mul(m, omega(x.w))), m};
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("bad L-element '" + s + "': " + msg);
    }
    i64 integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }
    // generator name: x1 | x2 | x3 | c; returns 0 for c, else the index
    int generator() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'c') {
            ++pos;
            return 0;
        }
        if (pos + 1 < s.size() && s[pos] == 'x' && s[pos + 1] >= '1' && s[pos + 1] <= '3') {
            int i = s[pos + 1] - '0';
            pos += 2;
            return i;
        }
        fail("expected generator x1, x2, x3 or c");
    }
};

}  // namespace

LElement parse_lelement(const WeightTriple& w, const std::string& text) {
    Parser p(text);
    i64 a[4] = {0, 0, 0, 0};  // a[0] ~ c, a[i] ~ x_i
    if (p.peek() == '(') {
        p.accept('(');
        i64 a1 = p.integer();
        if (!p.accept(',')) p.fail("expected ','");
        i64 a2 = p.integer();
        if (!p.accept(',')) p.fail("expected ','");
        i64 a3 = p.integer();
        if (!p.accept(',')) p.fail("expected ','");
        i64 ac = p.integer();
        if (!p.accept(')')) p.fail("expected ')'");
        if (!p.eof()) p.fail("trailing input after tuple");
        return normalize(w, a1, a2, a3, ac);
    }
    bool first = true;
    if (p.eof()) p.fail("empty input");
    while (!p.eof()) {
        i64 sign = 1;
        if (p.accept('+')) {
        } else if (p.accept('-')) {
            sign = -1;
        } else if (!first) {
            p.fail("expected '+' or '-' between terms");
        }
        first = false;
        char c = p.peek();
        i64 coef = 1;
        if (std::isdigit((unsigned char)c)) {
            coef = p.integer();
            if (p.accept('*')) {
                a[p.generator()] += sign * coef;
            } else if (coef == 0) {
                // bare 0 denotes the zero element
            } else if (p.peek() == 'x' || p.peek() == 'c') {
                a[p.generator()] += sign * coef;
            } else {
                p.fail("bare integer term (only 0 is allowed)");
            }
        } else {
            a[p.generator()] += sign;
        }
    }
    return normalize(w, a[1], a[2], a[3], a[0]);
}

std::string to_string(const LElement& x) {
    return "(" + std::to_string(x.l1) + "," + std::to_string(x.l2) + "," + std::to_string(x.l3) +
           "," + std::to_string(x.l) + ")";
}

}  // namespace nakcox
