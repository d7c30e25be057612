#pragma once
// Univariate integer polynomials, coefficients low to high over GMP.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace nakcox {

class IntPolynomial {
  public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(long v);
    static IntPolynomial monomial(int deg, long coeff = 1);

    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;  // 0 outside stored range
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator-() const;

    // exact division by a monic divisor; throws invalid_argument on nonzero
    // remainder or non-monic divisor
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    // division with remainder by a monic divisor
    void divmod_monic(const IntPolynomial& divisor, IntPolynomial& q, IntPolynomial& r) const;

    mpz_class eval(const mpz_class& x) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<mpz_class> c_;
    void trim();
};

// d-th cyclotomic polynomial, computed by repeated exact division
IntPolynomial cyclotomic(int d);

struct CyclotomicFactorization {
    // factor index d with multiplicity, sorted ascending by d
    std::vector<std::pair<int, int>> factors;
    IntPolynomial remainder;  // part with no cyclotomic factor (1 when fully split)
    bool fully_cyclotomic() const {
        return remainder.degree() == 0 && remainder.coeff(0) == 1;
    }
};

// strips all cyclotomic factors Phi_d, d scanned through the provable index
// bound phi(d) <= deg (phi(d) >= sqrt(d/2) so d <= 2*deg^2)
CyclotomicFactorization cyclotomic_factorize(const IntPolynomial& p);

}  // namespace nakcox
