#pragma once
// Cartan matrices of the reference algebras attached to a weight triple:
//   star [a,b,c]     path algebra of the star quiver with three arms
//   canonical (a,b,c)  squid/canonical algebra presented through the
//                      interval [0, c] of L(a,b,c)
//   extended canonical <a,b,c]  one-point extension of the canonical algebra
//   triangle <2,a,b>   realized as the Nakayama algebra N_{(a-1)(b-1)}(a)
// All are unit triangular up to vertex order, hence unimodular.

#include <vector>

#include "nakcox/intmatrix.hpp"
#include "nakcox/intpoly.hpp"
#include "nakcox/lgroup.hpp"

namespace nakcox {

// vertices: center 0, then each arm outward; n = a + b + c - 2 vertices.
// All arms oriented toward the center; Coxeter data is orientation independent
IntMatrix star_cartan(int a, int b, int c);

// vertices are the x in [0, c] of L(a,b,c) sorted by (delta, normal form);
// entry (i,j) = sdim(x_j - x_i); size a + b + c - 1
IntMatrix canonical_cartan(int a, int b, int c);
std::vector<LElement> canonical_vertices(const WeightTriple& w);

// one-point extension of canonical(a,b,c) at the projective attached to the
// source vertex 0; size a + b + c
IntMatrix extended_canonical_cartan(int a, int b, int c);
// variant extending at the sink vertex c; same Coxeter polynomial
IntMatrix extended_canonical_cartan_sink(int a, int b, int c);

IntPolynomial star_coxeter_poly(int a, int b, int c);
IntPolynomial canonical_coxeter_poly(int a, int b, int c);
IntPolynomial extended_canonical_coxeter_poly(int a, int b, int c);

// triangle singularity <2,a,b>: Coxeter poly of N_n(a), n = (a-1)(b-1)
IntPolynomial triangle_coxeter_poly(int a, int b);

}  // namespace nakcox
