#include "nakcox/reftypes.hpp"

#include <algorithm>
#include <stdexcept>

#include "nakcox/coxeter.hpp"
#include "nakcox/homcalc.hpp"
#include "nakcox/nakayama.hpp"

namespace nakcox {

IntMatrix star_cartan(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("star arms require a, b, c >= 1");
    int n = a + b + c - 2;
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    // center is vertex 0, arms are stored outward; arrows point away from the
    // center, so c_ij = 1 iff i lies on the path from the center to j
    int arm_len[3] = {a - 1, b - 1, c - 1};
    int base = 1;
    for (int arm = 0; arm < 3; ++arm) {
        int len = arm_len[arm];
        for (int t = 0; t < len; ++t) {
            m.at(0, base + t) = 1;
            for (int s = 0; s < t; ++s) m.at(base + s, base + t) = 1;
        }
        base += len;
    }
    return m;
}

std::vector<LElement> canonical_vertices(const WeightTriple& w) {
    std::vector<LElement> v;
    v.push_back(zero(w));
    for (int i = 1; i <= 3; ++i)
        for (long k = 1; k < w.p(i); ++k) v.push_back(mul(k, xgen(w, i)));
    v.push_back(cgen(w));
    std::sort(v.begin(), v.end(), [](const LElement& x, const LElement& y) {
        i64 dx = delta(x), dy = delta(y);
        if (dx != dy) return dx < dy;
        return x.key() < y.key();
    });
    return v;
}

IntMatrix canonical_cartan(int a, int b, int c) {
    WeightTriple w(a, b, c);
    std::vector<LElement> v = canonical_vertices(w);
    int n = (int)v.size();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = sdim(sub(v[j], v[i]));
    return m;
}

namespace {

IntMatrix extended_canonical_impl(int a, int b, int c, bool at_sink) {
    IntMatrix base = canonical_cartan(a, b, c);
    WeightTriple w(a, b, c);
    std::vector<LElement> v = canonical_vertices(w);
    std::vector<long> d(v.size(), 0);
    if (at_sink) {
        // radical of the new projective is the projective at vertex c
        LElement top = cgen(w);
        for (size_t i = 0; i < v.size(); ++i) d[i] = sdim(sub(top, v[i]));
    } else {
        // radical is the projective at the source vertex 0, dimension vector e_0
        for (size_t i = 0; i < v.size(); ++i) d[i] = (v[i] == zero(w)) ? 1 : 0;
    }
    return one_point_extension_cartan(base, d);
}

}  // namespace

IntMatrix extended_canonical_cartan(int a, int b, int c) {
    return extended_canonical_impl(a, b, c, false);
}

IntMatrix extended_canonical_cartan_sink(int a, int b, int c) {
    return extended_canonical_impl(a, b, c, true);
}

IntPolynomial star_coxeter_poly(int a, int b, int c) { return coxeter_poly(star_cartan(a, b, c)); }

IntPolynomial canonical_coxeter_poly(int a, int b, int c) {
    return coxeter_poly(canonical_cartan(a, b, c));
}

IntPolynomial extended_canonical_coxeter_poly(int a, int b, int c) {
    return coxeter_poly(extended_canonical_cartan(a, b, c));
}

IntPolynomial triangle_coxeter_poly(int a, int b) {
    int n = (a - 1) * (b - 1);
    return coxeter_poly_nakayama(n, a);
}

}  // namespace nakcox
