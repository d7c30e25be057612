#pragma once
// Faddeev-LeVerrier characteristic polynomial. Division-free apart from the
// exact trace divisions, so it shares no code path with the CRT computation
// it cross-checks.

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "nakcox/intmatrix.hpp"
#include "nakcox/intpoly.hpp"

inline nakcox::IntPolynomial charpoly_faddeev(const nakcox::IntMatrix& m) {
    int n = m.size();
    std::vector<mpz_class> c((size_t)n + 1);
    c[n] = 1;
    nakcox::IntMatrix a(n);  // A_0 = 0
    for (int k = 1; k <= n; ++k) {
        nakcox::IntMatrix t = a;
        for (int i = 0; i < n; ++i) t.at(i, i) += c[n - k + 1];
        a = m * t;  // A_k = M (A_{k-1} + c_{n-k+1} I)
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += a.at(i, i);
        mpz_class q, rem, kk(k);
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
        if (rem != 0) throw std::logic_error("trace not divisible in Faddeev-LeVerrier");
        c[n - k] = -q;
    }
    return nakcox::IntPolynomial(c);
}
