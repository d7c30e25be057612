#include "nakcox/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nakcox {

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(long v) {
    return IntPolynomial(std::vector<mpz_class>{mpz_class(v)});
}

IntPolynomial IntPolynomial::monomial(int deg, long coeff) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<mpz_class> c(deg + 1, mpz_class(0));
    c[deg] = coeff;
    return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || (size_t)i >= c_.size()) return zero;
    return c_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<mpz_class> c(std::max(c_.size(), rhs.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) c[i] += rhs.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<mpz_class> c(std::max(c_.size(), rhs.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) c[i] -= rhs.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(c_.size() + rhs.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> c = c_;
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::divmod_monic(const IntPolynomial& divisor, IntPolynomial& q,
                                 IntPolynomial& r) const {
    if (divisor.is_zero() || divisor.c_.back() != 1)
        throw std::invalid_argument("divisor must be monic");
    std::vector<mpz_class> rem = c_;
    int dd = divisor.degree();
    std::vector<mpz_class> quot;
    if ((int)rem.size() - 1 >= dd) quot.assign(rem.size() - dd, mpz_class(0));
    for (int i = (int)rem.size() - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class f = rem[i];
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    q = IntPolynomial(std::move(quot));
    r = IntPolynomial(std::move(rem));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    IntPolynomial q, r;
    divmod_monic(divisor, q, r);
    if (!r.is_zero()) throw std::invalid_argument("division is not exact");
    return q;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const mpz_class& v = c_[i];
        if (v == 0) continue;
        mpz_class av = abs(v);
        if (first) {
            if (v < 0) os << '-';
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit = (av == 1);
        if (i == 0) {
            os << av.get_str();
        } else {
            if (!unit) os << av.get_str() << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

namespace {

long euler_phi(long d) {
    long result = d, m = d;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

IntPolynomial cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<int> stack{d};
    while (!stack.empty()) {
        int m = stack.back();
        if (cache.count(m)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (int e = 1; e < m; ++e)
            if (m % e == 0 && !cache.count(e)) {
                stack.push_back(e);
                ready = false;
            }
        if (!ready) continue;
        stack.pop_back();
        // Phi_m = (x^m - 1) / prod of Phi_e over proper divisors e
        std::vector<mpz_class> num(m + 1, mpz_class(0));
        num[0] = -1;
        num[m] = 1;
        IntPolynomial phi{std::vector<mpz_class>(num)};
        for (int e = 1; e < m; ++e)
            if (m % e == 0) phi = phi.divide_exact(cache.at(e));
        cache.emplace(m, std::move(phi));
    }
    return cache.at(d);
}

CyclotomicFactorization cyclotomic_factorize(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    CyclotomicFactorization out;
    IntPolynomial rest = p;
    int deg0 = p.degree();
    // phi(d) >= sqrt(d/2), so any cyclotomic factor has index d <= 2*deg^2
    long dmax = 2L * deg0 * deg0;
    for (long d = 1; d <= dmax && rest.degree() > 0; ++d) {
        if (euler_phi(d) > rest.degree()) continue;
        IntPolynomial phi = cyclotomic((int)d);
        int mult = 0;
        for (;;) {
            IntPolynomial q, r;
            rest.divmod_monic(phi, q, r);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back((int)d, mult);
    }
    out.remainder = rest;
    return out;
}

}  // namespace nakcox
