#pragma once
// Coxeter matrix phi = -C^-T C of an algebra with unimodular Cartan matrix C,
// its characteristic polynomial (exact, CRT over word-size primes with a
// rigorous coefficient bound), and the Coxeter number = multiplicative order
// of phi (nullopt when infinite).

#include <optional>

#include "nakcox/intmatrix.hpp"
#include "nakcox/intpoly.hpp"

namespace nakcox {

IntMatrix coxeter_matrix(const IntMatrix& cartan);

// characteristic polynomial det(X*I - M), monic of degree n
IntPolynomial char_poly(const IntMatrix& m);

// multiplicative order of m, or nullopt if no power is the identity.
// Decision procedure: the order is finite iff char_poly(m) is a product of
// cyclotomics AND m is diagonalizable; candidate order m0 = lcm of the factor
// indices, confirmed by exact computation of m^m0.
std::optional<unsigned long> matrix_order(const IntMatrix& m);

IntPolynomial coxeter_poly(const IntMatrix& cartan);
std::optional<unsigned long> coxeter_number(const IntMatrix& cartan);

IntPolynomial coxeter_poly_nakayama(int n, int r);
std::optional<unsigned long> coxeter_number_nakayama(int n, int r);

// closed form for the wall rows: for r >= 9 the first periodic cell in row r
// sits at n = r + 7 with polynomial (X+1)(X^6 - X^3 + 1)(X^r + 1) and
// Coxeter number lcm(2r, 18)
IntPolynomial wall_closed_form_poly(int r);
unsigned long wall_closed_form_number(int r);

}  // namespace nakcox
