#ifndef TORUSDISC_NUMFIELD_HPP
#define TORUSDISC_NUMFIELD_HPP

#include "torusdisc/intpoly.hpp"
#include "torusdisc/matrix.hpp"

#include <optional>
#include <vector>

namespace torusdisc {

// Number field Q[x]/(f) with its maximal order. Integral basis rows are in
// the power basis; the first basis element is 1. Maximal orders are computed
// by Pohst-Zassenhaus Round-2 at every prime whose square divides disc(f);
// degree cap 6.
class NumberField {
  public:
    static NumberField create(const IntPoly& f);
    // Override path: the supplied basis is verified (ring closure,
    // discriminant consistency, Round-2 fixpoint) and rejected if wrong.
    static NumberField create_with_basis(const IntPoly& f, const RatMatrix& basis);

    const IntPoly& defining_poly() const { return f_; }
    unsigned degree() const { return degree_; }
    const RatMatrix& integral_basis() const { return basis_; }
    // signed discriminant; equals det of the trace Gram on the integral basis
    const Int& field_disc() const { return disc_; }
    // [O_K : Z[theta]]
    const Int& equation_index() const { return eq_index_; }
    const RatMatrix& trace_gram() const { return gram_; }
    // integer structure constants: b_i * b_j = sum_k c[i][j][k] b_k
    const Int& structure(unsigned i, unsigned j, unsigned k) const {
        return mult_[(i * degree_ + j) * degree_ + k];
    }

    // trace of an element given by coordinates in the integral basis
    Rat trace_on_basis(const std::vector<Rat>& coords) const;
    // multiply two coordinate vectors (integral basis)
    std::vector<Rat> multiply(const std::vector<Rat>& x,
                              const std::vector<Rat>& y) const;
    // coordinates of 1
    std::vector<Rat> one() const;
    // power-basis coordinates -> integral-basis coordinates
    std::vector<Rat> from_power_basis(const std::vector<Rat>& c) const;

  private:
    IntPoly f_;
    unsigned degree_ = 0;
    RatMatrix basis_;      // n x n, rows = integral basis in power basis
    RatMatrix basis_inv_;  // inverse
    Int disc_;
    Int eq_index_;
    RatMatrix gram_;
    std::vector<Int> mult_;
    std::vector<Int> power_traces_; // Tr(theta^k), k = 0 .. 2n-2

    void finish(); // computes gram_, mult_, disc checks
};

enum class GaloisType { C1, C2, C3, S3, C4, V4, D4, A4, S4 };

const char* galois_type_name(GaloisType t);
unsigned galois_group_order(GaloisType t);

// Exact small-degree classification: discriminant-square test for degrees
// 2, 3; resolvent cubic with the split-over-Q(sqrt(disc)) refinement for
// degree 4. Requires monic irreducible f, deg <= 4.
GaloisType galois_type_exact(const IntPoly& f);

// disc(f) for monic f via the Sylvester resultant (signed).
// (wrapper over poly_discriminant, for readability at call sites)
inline Int disc_of_poly(const IntPoly& f) { return poly_discriminant(f); }

} // namespace torusdisc

#endif
