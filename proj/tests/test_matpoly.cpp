#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nakcox/coxeter.hpp"
#include "nakcox/intmatrix.hpp"
#include "nakcox/intpoly.hpp"
#include "support/charpoly_oracle.hpp"

using namespace nakcox;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

// product of elementary row operations and swaps: det = +-1 by construction
IntMatrix random_unimodular(std::mt19937& rng, int n, int ops) {
    std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), kind(0, 3);
    IntMatrix m = IntMatrix::identity(n);
    for (int t = 0; t < ops; ++t) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        if (kind(rng) == 0) {
            for (int k = 0; k < n; ++k) std::swap(m.at(i, k), m.at(j, k));
        } else {
            mpz_class c = coef(rng);
            for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
        }
    }
    return m;
}

IntPolynomial poly(std::initializer_list<long> low_to_high) {
    std::vector<mpz_class> c;
    for (long v : low_to_high) c.emplace_back(v);
    return IntPolynomial(c);
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    IntMatrix a(2, {1, 2, 3, 4});
    IntMatrix b(2, {0, 1, 1, 0});
    CHECK((a * b) == IntMatrix(2, {2, 1, 4, 3}));
    CHECK((b * a) == IntMatrix(2, {3, 4, 1, 2}));
    CHECK((a + (-a)) == IntMatrix(2));
    CHECK(a.transpose() == IntMatrix(2, {1, 3, 2, 4}));
    CHECK(a.pow(0) == IntMatrix::identity(2));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.max_abs() == 4);
    CHECK(IntMatrix(2, {-7, 2, 0, 3}).max_abs() == 7);
}

TEST_CASE("determinant") {
    CHECK(IntMatrix(2, {1, 2, 3, 4}).det() == -2);
    CHECK(IntMatrix(3, {2, 0, 0, 0, 3, 0, 0, 0, 4}).det() == 24);
    CHECK(IntMatrix(3, {1, 2, 3, 4, 5, 6, 7, 8, 9}).det() == 0);
    CHECK(IntMatrix::identity(5).det() == 1);
    // row swap flips the sign: permutation matrix of a transposition
    CHECK(IntMatrix(2, {0, 1, 1, 0}).det() == -1);
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        IntMatrix m = random_unimodular(rng, 5, 12);
        mpz_class d = m.det();
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("unimodular inverse, triangular fast path and general path") {
    IntMatrix u(3, {1, 2, 5, 0, 1, -3, 0, 0, 1});
    CHECK(u * u.inverse_unimodular() == IntMatrix::identity(3));
    IntMatrix l = u.transpose();
    CHECK(l.inverse_unimodular() * l == IntMatrix::identity(3));
    // permutation matrix exercises the dense fallback
    IntMatrix p(3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    CHECK(p * p.inverse_unimodular() == IntMatrix::identity(3));
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        IntMatrix m = random_unimodular(rng, 5, 10);
        CHECK(m * m.inverse_unimodular() == IntMatrix::identity(5));
        CHECK(m.inverse_unimodular() * m == IntMatrix::identity(5));
    }
    CHECK_THROWS_AS(IntMatrix(2, {2, 0, 0, 1}).inverse_unimodular(), std::invalid_argument);
    CHECK_THROWS_AS(IntMatrix(2, {1, 1, 1, 1}).inverse_unimodular(), std::invalid_argument);
}

TEST_CASE("characteristic polynomial against Faddeev-LeVerrier") {
    std::mt19937 rng(23);
    for (int t = 0; t < 8; ++t) {
        IntMatrix m = random_matrix(rng, 6, -9, 9);
        CHECK(char_poly(m) == charpoly_faddeev(m));
    }
    for (int t = 0; t < 5; ++t) {
        IntMatrix m = random_unimodular(rng, 7, 14);
        CHECK(char_poly(m) == charpoly_faddeev(m));
    }
    // larger entries force several CRT primes
    for (int t = 0; t < 3; ++t) {
        IntMatrix m = random_matrix(rng, 5, -10000, 10000);
        CHECK(char_poly(m) == charpoly_faddeev(m));
    }
}

TEST_CASE("characteristic polynomial closed cases") {
    CHECK(char_poly(IntMatrix::identity(4)) == poly({1, -4, 6, -4, 1}));
    CHECK(char_poly(IntMatrix(2, {1, 1, 0, 1})) == poly({1, -2, 1}));
    CHECK(char_poly(IntMatrix(1, {-3})) == poly({3, 1}));
    CHECK(char_poly(IntMatrix(0)) == poly({1}));
    IntMatrix d(3, {2, 0, 0, 0, -1, 0, 0, 0, 5});
    CHECK(char_poly(d) == poly({-2, 1}) * poly({1, 1}) * poly({-5, 1}));
    // companion matrix of x^3 - 2x - 5
    IntMatrix comp(3, {0, 0, 5, 1, 0, 2, 0, 1, 0});
    CHECK(char_poly(comp) == poly({-5, -2, 0, 1}));
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial q = poly({1, 1, 1});        // x^2 + x + 1
    IntPolynomial dvs = poly({-2, 0, 0, 1});  // x^3 - 2
    IntPolynomial rem = poly({7, 1});         // x + 7
    IntPolynomial p = q * dvs + rem;
    IntPolynomial qq, rr;
    p.divmod_monic(dvs, qq, rr);
    CHECK(qq == q);
    CHECK(rr == rem);
    CHECK((q * dvs).divide_exact(dvs) == q);
    CHECK_THROWS_AS(p.divide_exact(dvs), std::invalid_argument);
    CHECK_THROWS_AS(p.divide_exact(poly({1, 2})), std::invalid_argument);
    CHECK(poly({0}).is_zero());
    CHECK((q - q).is_zero());
    CHECK(q.degree() == 2);
    CHECK(poly({}).degree() == -1);
    CHECK(q.eval(2) == 7);
    CHECK(poly({-5, -2, 0, 1}).eval(3) == 16);
    CHECK(IntPolynomial::monomial(3, -2) == poly({0, 0, 0, -2}));
    CHECK(IntPolynomial::constant(9) == poly({9}));
}

TEST_CASE("polynomial printing") {
    CHECK(poly({1, 1, 1}).to_string() == "x^2 + x + 1");
    CHECK(poly({-1, 0, 1}).to_string() == "x^2 - 1");
    CHECK(poly({1, -3, 1}).to_string() == "x^2 - 3*x + 1");
    CHECK(poly({0, 2}).to_string() == "2*x");
    CHECK(poly({-4}).to_string() == "-4");
    CHECK(poly({}).to_string() == "0");
    CHECK(poly({0, 1}).to_string("T") == "T");
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(3) == poly({1, 1, 1}));
    CHECK(cyclotomic(4) == poly({1, 0, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(7) == poly({1, 1, 1, 1, 1, 1, 1}));
    // prod over d | n of Phi_d = x^n - 1
    for (int n : {12, 30}) {
        IntPolynomial prod = IntPolynomial::constant(1);
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == IntPolynomial::monomial(n) - IntPolynomial::constant(1));
    }
    // degree of Phi_d is euler_phi(d); checked through the factorization of x^d - 1
    CHECK(cyclotomic(18).degree() == 6);
    CHECK(cyclotomic(24).degree() == 8);
    CHECK(cyclotomic(105).degree() == 48);
    // first index with a coefficient outside {-1, 0, 1}
    IntPolynomial p105 = cyclotomic(105);
    mpz_class least = 0;
    for (const mpz_class& c : p105.coeffs()) least = std::min(least, c);
    CHECK(least == -2);
}

TEST_CASE("cyclotomic factorization") {
    IntPolynomial p = cyclotomic(2) * cyclotomic(2) * cyclotomic(3);
    CyclotomicFactorization f = cyclotomic_factorize(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::make_pair(2, 2));
    CHECK(f.factors[1] == std::make_pair(3, 1));
    CHECK(f.fully_cyclotomic());

    CyclotomicFactorization g = cyclotomic_factorize(poly({-2, 0, 1}));
    CHECK(g.factors.empty());
    CHECK(!g.fully_cyclotomic());
    CHECK(g.remainder == poly({-2, 0, 1}));

    CyclotomicFactorization h = cyclotomic_factorize(poly({-1, 1}) * poly({-2, 0, 1}));
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0] == std::make_pair(1, 1));
    CHECK(h.remainder == poly({-2, 0, 1}));

    CyclotomicFactorization big = cyclotomic_factorize(cyclotomic(24) * cyclotomic(18));
    REQUIRE(big.factors.size() == 2);
    CHECK(big.factors[0] == std::make_pair(18, 1));
    CHECK(big.factors[1] == std::make_pair(24, 1));
    CHECK(big.fully_cyclotomic());
}

TEST_CASE("matrix order") {
    CHECK(matrix_order(IntMatrix::identity(3)) == 1ul);
    CHECK(matrix_order(-IntMatrix::identity(2)) == 2ul);
    CHECK(matrix_order(IntMatrix(2, {0, -1, 1, 0})) == 4ul);
    CHECK(matrix_order(IntMatrix(2, {0, -1, 1, -1})) == 3ul);
    // unipotent: cyclotomic characteristic polynomial but infinite order
    CHECK(!matrix_order(IntMatrix(2, {1, 1, 0, 1})).has_value());
    CHECK(!matrix_order(IntMatrix(2, {-1, 1, 0, -1})).has_value());
    // non-cyclotomic eigenvalue
    CHECK(!matrix_order(IntMatrix(2, {2, 0, 0, 1})).has_value());
    // permutation of cycle type (3, 2): order 6
    IntMatrix perm(5);
    perm.at(0, 1) = 1;
    perm.at(1, 2) = 1;
    perm.at(2, 0) = 1;
    perm.at(3, 4) = 1;
    perm.at(4, 3) = 1;
    CHECK(matrix_order(perm) == 6ul);
}
