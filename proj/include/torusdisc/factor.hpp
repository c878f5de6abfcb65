#ifndef TORUSDISC_FACTOR_HPP
#define TORUSDISC_FACTOR_HPP

#include "torusdisc/intpoly.hpp"

#include <vector>

namespace torusdisc {

// Factorization over Q into primitive irreducible integer polynomials with
// positive leading coefficients; the product of the factors (with
// multiplicity) equals the input up to a rational constant.
// Squarefree split (Yun), then Zassenhaus: Berlekamp mod p, quadratic Hensel
// lifting, subset recombination. Hard degree cap 12.
std::vector<std::pair<IntPoly, unsigned>> factor_over_Q(const IntPoly& f);

// Squarefree decomposition of a primitive polynomial with positive lc:
// f = prod part_i ^ mult_i with the parts squarefree and pairwise coprime.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

} // namespace torusdisc

#endif
