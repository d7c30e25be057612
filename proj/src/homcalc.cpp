#include "nakcox/homcalc.hpp"

namespace nakcox {

long sdim(const LElement& x, int eliminated) {
    if (eliminated < 1 || eliminated > 3)
        throw std::invalid_argument("eliminated index must be 1, 2 or 3");
    const WeightTriple& w = x.w;
    int e = eliminated;
    int j = (e == 1) ? 2 : 1;
    int k = (e == 3) ? 2 : 3;
    i64 p = w.lcm();
    i64 de = p / w.p(e), dj = p / w.p(j), dk = p / w.p(k);
    i64 dx = delta(x);
    long count = 0;
    // a_e*x_e + a_j*x_j + a_k*x_k = x forces matching delta; delta equality is
    // necessary but not sufficient, so candidates are re-verified exactly
    for (i64 ae = 0; ae < w.p(e); ++ae) {
        i64 rem_e = dx - ae * de;
        if (rem_e < 0) break;
        for (i64 aj = 0; aj * dj <= rem_e; ++aj) {
            i64 rem = rem_e - aj * dj;
            if (rem % dk != 0) continue;
            i64 ak = rem / dk;
            i64 a[4] = {0, 0, 0, 0};
            a[e] = ae;
            a[j] = aj;
            a[k] = ak;
            if (normalize(w, a[1], a[2], a[3], 0) == x) ++count;
        }
    }
    return count;
}

long hom_dim_lb(const LElement& x, const LElement& y) { return sdim(sub(y, x)); }

long ext1_dim_lb(const LElement& x, const LElement& y) {
    return sdim(sub(add(x, omega(x.w)), y));
}

bool pair_extension_free(const LElement& y) {
    LElement c = cgen(y.w);
    return leq(neg(c), y) && leq(y, c);
}

}  // namespace nakcox
