#pragma once
// Dense square integer matrices over GMP. Everything is exact; the only
// partial operation is inversion, which requires det = +-1.

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nakcox {

class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_((size_t)n * n, mpz_class(0)) {
        if (n < 0) throw std::invalid_argument("matrix size must be >= 0");
    }
    IntMatrix(int n, const std::vector<long>& entries);  // row-major

    static IntMatrix identity(int n);

    int size() const { return n_; }
    mpz_class& at(int i, int j) { return a_[(size_t)i * n_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[(size_t)i * n_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix pow(unsigned long e) const;

    mpz_class det() const;  // fraction-free Gaussian elimination (Bareiss)

    // inverse, valid only when det = +-1; throws invalid_argument otherwise
    IntMatrix inverse_unimodular() const;

    mpz_class max_abs() const;  // largest |entry|

    std::string to_string() const;  // rows "[a b c]" joined by newlines

  private:
    int n_ = 0;
    std::vector<mpz_class> a_;
};

}  // namespace nakcox
