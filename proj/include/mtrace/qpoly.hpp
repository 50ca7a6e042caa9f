#pragma once

#include <gmpxx.h>

#include <vector>

#include "mtrace/matrix.hpp"

namespace mtrace {
namespace qpoly {

// Polynomials over Q: ascending coefficients, trimmed (empty vector = 0).
using QPoly = std::vector<mpq_class>;

QPoly trim(QPoly f);
std::size_t degree(const QPoly& f);  // degree of 0 reported as 0
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
// Quotient and remainder with nonzero divisor.
struct DivMod {
  QPoly quot, rem;
};
DivMod divmod(const QPoly& a, const QPoly& b);
QPoly monic(QPoly f);
QPoly gcd(QPoly a, QPoly b);  // monic gcd
QPoly derivative(const QPoly& f);
mpq_class eval(const QPoly& f, const mpq_class& x);

// u*a + v*b = g with g the monic gcd.
struct Bezout {
  QPoly g, u, v;
};
Bezout ext_gcd(QPoly a, QPoly b);

// Yun: f = c * prod_i out[i]^(i+1) with out[i] squarefree, pairwise coprime,
// monic.  Constant factor dropped.
std::vector<QPoly> squarefree_decomposition(QPoly f);

// Monic irreducible factors of f over Q, with multiplicity, by squarefree
// decomposition followed by Berlekamp factorization mod a small prime,
// Hensel lifting, and subset recombination.
std::vector<QPoly> factor_rational(const QPoly& f);

// Minimal polynomial (monic, over Q) of a square matrix over Q.
QPoly minimal_polynomial(const Matrix& a);

// A matrix over Q(zeta_n) (or Q) as a matrix over Q: each entry becomes the
// deg x deg block of multiplication by that entry in the power basis.
Matrix flatten_to_rationals(const Matrix& a);

// p(a) for a square matrix a over any supported field; coefficients of p are
// rational and act through the unique map Q -> field.
Matrix eval_on_matrix(const QPoly& p, const Matrix& a);

}  // namespace qpoly
}  // namespace mtrace
