#include "nakcox/coxeter.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "nakcox/nakayama.hpp"

namespace nakcox {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for n < 3.3e24 with these bases
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

// characteristic polynomial mod p: Hessenberg reduction, then the standard
// leading-principal-minor recurrence; returns monic coefficients low to high
std::vector<u64> charpoly_mod(const IntMatrix& m, u64 p) {
    int n = m.size();
    std::vector<u64> h((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpz_class v = m.at(i, j) % (long)p;
            if (v < 0) v += (long)p;
            h[(size_t)i * n + j] = v.get_ui();
        }
    auto at = [&](int i, int j) -> u64& { return h[(size_t)i * n + j]; };

    for (int k = 0; k < n - 2; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != k + 1) {
            // similarity swap of rows and columns piv <-> k+1
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(at(i, piv), at(i, k + 1));
        }
        u64 inv = invmod(at(k + 1, k), p);
        for (int i = k + 2; i < n; ++i) {
            if (at(i, k) == 0) continue;
            u64 f = mulmod(at(i, k), inv, p);
            // A -> E A E^{-1} with E = I - f*e_i*e_{k+1}^T
            for (int j = 0; j < n; ++j)
                at(i, j) = (at(i, j) + p - mulmod(f, at(k + 1, j), p)) % p;
            for (int i2 = 0; i2 < n; ++i2)
                at(i2, k + 1) = (at(i2, k + 1) + mulmod(f, at(i2, i), p)) % p;
        }
    }

    // p_0 = 1; p_m = (X - h[m-1][m-1]) p_{m-1}
    //              - sum_{i=m-1..1} h[i-1][m-1] (prod_{j=i..m-1} h[j][j-1]) p_{i-1}
    std::vector<std::vector<u64>> pm(n + 1);
    pm[0] = {1};
    for (int m1 = 1; m1 <= n; ++m1) {
        std::vector<u64> cur(m1 + 1, 0);
        u64 diag = at(m1 - 1, m1 - 1);
        const auto& prev = pm[m1 - 1];
        for (int t = 0; t < m1; ++t) {
            cur[t + 1] = (cur[t + 1] + prev[t]) % p;
            cur[t] = (cur[t] + p - mulmod(diag, prev[t], p)) % p;
        }
        u64 prod = 1;
        for (int i = m1 - 1; i >= 1; --i) {
            // prod = h[i][i-1] * ... * h[m1-1][m1-2]
            prod = mulmod(prod, at(i, i - 1), p);
            if (prod == 0) break;
            u64 f = mulmod(at(i - 1, m1 - 1), prod, p);
            if (f == 0) continue;
            const auto& pi = pm[i - 1];
            for (size_t t = 0; t < pi.size(); ++t)
                cur[t] = (cur[t] + p - mulmod(f, pi[t], p)) % p;
        }
        pm[m1] = std::move(cur);
    }
    return pm[n];
}

}  // namespace

IntMatrix coxeter_matrix(const IntMatrix& cartan) {
    IntMatrix cinv_t = cartan.inverse_unimodular().transpose();
    return -(cinv_t * cartan);
}

IntPolynomial char_poly(const IntMatrix& m) {
    int n = m.size();
    if (n == 0) return IntPolynomial::constant(1);

    // |coeff| <= (1 + sqrt(n)*maxabs)^n via Hadamard on the principal minors
    mpz_class b = m.max_abs();
    long ceil_sqrt = 1;
    while (ceil_sqrt * ceil_sqrt < n) ++ceil_sqrt;
    mpz_class sqrt_n = ceil_sqrt;
    mpz_class bound;
    mpz_class base = 1 + sqrt_n * b;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), n);

    std::vector<u64> primes;
    mpz_class modulus = 1;
    for (u64 cand = (1ull << 31) - 1; modulus <= 2 * bound; cand -= 2) {
        if (!is_prime(cand)) continue;
        primes.push_back(cand);
        modulus *= (unsigned long)cand;
    }

    // CRT accumulation into [0, modulus), then shift to the symmetric range
    std::vector<mpz_class> acc(n + 1, mpz_class(0));
    mpz_class partial = 1;
    for (u64 pr : primes) {
        std::vector<u64> cp = charpoly_mod(m, pr);
        if (partial == 1) {
            for (int i = 0; i <= n; ++i) acc[i] = (unsigned long)cp[i];
        } else {
            mpz_class pm(partial % (long)pr);
            u64 inv = invmod(pm.get_ui(), pr);
            for (int i = 0; i <= n; ++i) {
                mpz_class r(acc[i] % (long)pr);
                u64 diff = (cp[i] + pr - r.get_ui()) % pr;
                acc[i] += partial * (unsigned long)mulmod(diff, inv, pr);
            }
        }
        partial *= (unsigned long)pr;
    }
    std::vector<mpz_class> coeffs(n + 1);
    mpz_class half = partial / 2;
    for (int i = 0; i <= n; ++i)
        coeffs[i] = (acc[i] > half) ? mpz_class(acc[i] - partial) : acc[i];
    return IntPolynomial(std::move(coeffs));
}

std::optional<unsigned long> matrix_order(const IntMatrix& m) {
    int n = m.size();
    if (n == 0) return 1;
    CyclotomicFactorization f = cyclotomic_factorize(char_poly(m));
    if (!f.fully_cyclotomic()) return std::nullopt;
    unsigned long m0 = 1;
    for (auto [d, mult] : f.factors) {
        (void)mult;
        m0 = std::lcm(m0, (unsigned long)d);
        if (m0 > 100000000ul)
            throw std::logic_error("candidate matrix order is implausibly large");
    }
    // order is finite iff m^m0 = I, and then m0 is minimal: the eigenvalues
    // contain primitive d-th roots of unity for every factor index d
    if (m.pow(m0) == IntMatrix::identity(n)) return m0;
    return std::nullopt;
}

IntPolynomial coxeter_poly(const IntMatrix& cartan) { return char_poly(coxeter_matrix(cartan)); }

std::optional<unsigned long> coxeter_number(const IntMatrix& cartan) {
    return matrix_order(coxeter_matrix(cartan));
}

IntPolynomial coxeter_poly_nakayama(int n, int r) {
    return coxeter_poly(nakayama_cartan(n, r));
}

std::optional<unsigned long> coxeter_number_nakayama(int n, int r) {
    return coxeter_number(nakayama_cartan(n, r));
}

IntPolynomial wall_closed_form_poly(int r) {
    if (r < 9) throw std::invalid_argument("wall closed form requires r >= 9");
    IntPolynomial xp1(std::vector<mpz_class>{1, 1});  // X + 1
    IntPolynomial mid(std::vector<mpz_class>{1, 0, 0, -1, 0, 0, 1});  // X^6 - X^3 + 1
    std::vector<mpz_class> xr(r + 1, mpz_class(0));
    xr[0] = 1;
    xr[r] = 1;
    return xp1 * mid * IntPolynomial(std::move(xr));
}

unsigned long wall_closed_form_number(int r) {
    if (r < 9) throw std::invalid_argument("wall closed form requires r >= 9");
    return std::lcm(2ul * r, 18ul);
}

}  // namespace nakcox
