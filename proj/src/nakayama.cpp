#include "nakcox/nakayama.hpp"

#include <algorithm>
#include <stdexcept>

namespace nakcox {

namespace {

void check_params(int n, int r) {
    if (r < 2 || r > n)
        throw std::invalid_argument("Nakayama parameters require 2 <= r <= n");
}

}  // namespace

IntMatrix nakayama_cartan(int n, int r) {
    check_params(n, r);
    IntMatrix c(n);
    // dim e_j A e_i counts the path i -> j, present iff j - i < r
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= std::min(i + r - 1, n); ++j) c.at(i - 1, j - 1) = 1;
    return c;
}

std::vector<long> nakayama_dimvec_proj(int n, int r, int i) {
    check_params(n, r);
    if (i < 1 || i > n) throw std::invalid_argument("vertex index out of range");
    std::vector<long> d(n, 0);
    for (int j = std::max(1, i - r + 1); j <= i; ++j) d[j - 1] = 1;
    return d;
}

std::vector<long> nakayama_dimvec_inj(int n, int r, int i) {
    check_params(n, r);
    if (i < 1 || i > n) throw std::invalid_argument("vertex index out of range");
    std::vector<long> d(n, 0);
    for (int j = i; j <= std::min(n, i + r - 1); ++j) d[j - 1] = 1;
    return d;
}

IntMatrix one_point_extension_cartan(const IntMatrix& cartan, const std::vector<long>& d) {
    int n = cartan.size();
    if ((int)d.size() != n)
        throw std::invalid_argument("dimension vector size does not match Cartan matrix");
    IntMatrix out(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = cartan.at(i, j);
    for (int i = 0; i < n; ++i) out.at(i, n) = d[i];
    out.at(n, n) = 1;
    return out;
}

}  // namespace nakcox
