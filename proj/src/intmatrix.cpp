#include "nakcox/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace nakcox {

IntMatrix::IntMatrix(int n, const std::vector<long>& entries) : IntMatrix(n) {
    if (entries.size() != (size_t)n * n)
        throw std::invalid_argument("entry count does not match matrix size");
    for (size_t i = 0; i < entries.size(); ++i) a_[i] = entries[i];
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix out(n_);
    mpz_class acc;
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) {
                if (rhs.at(k, j) == 0) continue;
                acc = aik * rhs.at(k, j);
                out.at(i, j) += acc;
            }
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
    IntMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

IntMatrix IntMatrix::pow(unsigned long e) const {
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1ul) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

mpz_class IntMatrix::det() const {
    // Bareiss fraction-free elimination; divisions are exact
    if (n_ == 0) return 1;
    std::vector<mpz_class> m = a_;
    auto e = [&](int i, int j) -> mpz_class& { return m[(size_t)i * n_ + j]; };
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (e(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n_; ++i)
                if (e(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n_; ++j) std::swap(e(k, j), e(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) {
                mpz_class t = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = e(k, k);
    }
    return sign > 0 ? e(n_ - 1, n_ - 1) : mpz_class(-e(n_ - 1, n_ - 1));
}

namespace {

enum class Triangular { No, UnitUpper, UnitLower };

Triangular triangular_kind(const IntMatrix& m) {
    int n = m.size();
    bool upper = true, lower = true;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 1) return Triangular::No;
        for (int j = 0; j < i; ++j) {
            if (m.at(i, j) != 0) upper = false;
            if (m.at(j, i) != 0) lower = false;
        }
    }
    if (upper) return Triangular::UnitUpper;
    if (lower) return Triangular::UnitLower;
    return Triangular::No;
}

}  // namespace

IntMatrix IntMatrix::inverse_unimodular() const {
    // unit triangular matrices (every Cartan matrix here) invert by integer
    // back substitution; X[i][j] = delta_ij - sum_{k>i} A[i][k] X[k][j]
    Triangular tri = triangular_kind(*this);
    if (tri != Triangular::No) {
        int n = n_;
        IntMatrix x(n);
        if (tri == Triangular::UnitUpper) {
            for (int j = 0; j < n; ++j)
                for (int i = j; i >= 0; --i) {
                    mpz_class s = (i == j) ? 1 : 0;
                    for (int k = i + 1; k <= j; ++k) s -= at(i, k) * x.at(k, j);
                    x.at(i, j) = s;
                }
        } else {
            for (int j = 0; j < n; ++j)
                for (int i = j; i < n; ++i) {
                    mpz_class s = (i == j) ? 1 : 0;
                    for (int k = j; k < i; ++k) s -= at(i, k) * x.at(k, j);
                    x.at(i, j) = s;
                }
        }
        return x;
    }
    mpz_class d = det();
    if (d != 1 && d != -1)
        throw std::invalid_argument("matrix is not unimodular, determinant " + d.get_str());
    // adjugate via Gauss-Jordan over rationals would lose exactness guarantees;
    // instead solve with integer row reduction on [A | I] scaled by running
    // pivots, then divide by det at the end (Bareiss on the augmented system)
    int n = n_;
    std::vector<mpq_class> m((size_t)n * 2 * n);
    auto e = [&](int i, int j) -> mpq_class& { return m[(size_t)i * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) e(i, j) = at(i, j);
        e(i, n + i) = 1;
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (e(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::logic_error("unimodular matrix reduced to singular");
        if (piv != k)
            for (int j = 0; j < 2 * n; ++j) std::swap(e(k, j), e(piv, j));
        mpq_class inv = 1 / e(k, k);
        for (int j = 0; j < 2 * n; ++j) e(k, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || e(i, k) == 0) continue;
            mpq_class f = e(i, k);
            for (int j = 0; j < 2 * n; ++j) e(i, j) -= f * e(k, j);
        }
    }
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class v = e(i, n + j);
            v.canonicalize();
            if (v.get_den() != 1)
                throw std::logic_error("non-integral inverse of unimodular matrix");
            out.at(i, j) = v.get_num();
        }
    return out;
}

mpz_class IntMatrix::max_abs() const {
    mpz_class m = 0;
    for (const auto& v : a_) {
        mpz_class av = abs(v);
        if (av > m) m = av;
    }
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << '[';
        for (int j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << ']';
        if (i + 1 < n_) os << '\n';
    }
    return os.str();
}

}  // namespace nakcox
