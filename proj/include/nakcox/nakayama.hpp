#pragma once
// Cartan data of the linear Nakayama algebras N_n(r): path algebra of the
// equioriented A_n quiver modulo paths of length r (so r is the maximal
// number of vertices a path touches). Requires 2 <= r <= n.

#include <vector>

#include "nakcox/intmatrix.hpp"

namespace nakcox {

// c_ij = dim e_j A e_i = 1 iff i <= j <= min(i + r - 1, n); unit upper triangular
IntMatrix nakayama_cartan(int n, int r);

// dimension vector of the projective P_i: interval [max(1, i - r + 1), i]
std::vector<long> nakayama_dimvec_proj(int n, int r, int i);
// dimension vector of the injective I_i: interval [i, min(n, i + r - 1)]
std::vector<long> nakayama_dimvec_inj(int n, int r, int i);

// Cartan matrix of the one-point extension [[C, d], [0, 1]]
IntMatrix one_point_extension_cartan(const IntMatrix& cartan, const std::vector<long>& d);

}  // namespace nakcox
