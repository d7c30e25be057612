#pragma once
// Section-space dimensions in L(p1,p2,p3) and the derived hom/ext bounds.
// sdim(x) counts monomials a1*x1 + a2*x2 + a3*x3 = x with a_i >= 0 and
// a_e < p_e for one eliminated index e; the count is independent of e.

#include "nakcox/lgroup.hpp"

namespace nakcox {

// number of monomial sections of degree x; eliminated in {1,2,3}
long sdim(const LElement& x, int eliminated = 1);

// dim Hom(O(x), O(y)) in the coherent-sheaf category
long hom_dim_lb(const LElement& x, const LElement& y);

// dim Ext^1(O(x), O(y)) = dim Hom(O(y), O(x + omega)) by Serre duality
long ext1_dim_lb(const LElement& x, const LElement& y);

// Ext^1(O, O(y)) = 0 = Ext^1(O(y), O) for line bundles iff -c <= y <= c
bool pair_extension_free(const LElement& y);

}  // namespace nakcox
