#ifndef TORUSDISC_TORUS_HPP
#define TORUSDISC_TORUS_HPP

#include "torusdisc/etale.hpp"
#include "torusdisc/lattice.hpp"
#include "torusdisc/wedge.hpp"

#include <optional>
#include <vector>

namespace torusdisc {

// Basis of the unital associative algebra generated by commuting semisimple
// rational matrices; the identity is always the first basis element.
// Throws non_commuting / non_semisimple.
std::vector<RatMatrix> algebra_closure(const std::vector<RatMatrix>& gens);

// Lambda = span(E_basis) cap gl(n, Z) as a saturated sublattice of Z^(n^2),
// rows flattened row-major.
IntegerLattice matrix_order(const std::vector<RatMatrix>& algebra_basis,
                            unsigned n);

struct CanonicalTensor {
    std::vector<Int> nu; // primitive, first nonzero positive
    Int denom;           // Disc(Lambda)
    unsigned degree;     // d = dim E
    unsigned ambient;    // n^2
};

struct HeightDiscReport {
    Int disc;
    Int delta;
    bool equal;
};

// A torus embedded in GL(n, Q) through the algebra E = Q[generators]:
// carries the order Lambda = E cap gl(n, Z), its discriminant, the canonical
// tensor eta = (nu tensor nu) / Disc, and the discriminant-height delta.
class EmbeddedTorus {
  public:
    static EmbeddedTorus from_generators(unsigned n, std::vector<RatMatrix> gens);

    // Multiplication representation of an etale algebra on the basis of a
    // finite-index subring of O_E (given in O_E coordinates; defaults to O_E
    // itself). The resulting matrix order is that subring.
    static EmbeddedTorus embed_regular(
        const std::vector<std::pair<IntPoly, unsigned>>& factors,
        const std::optional<IntMat>& order_in_oe = std::nullopt);

    unsigned ambient_n() const { return n_; }
    unsigned dim() const { return dim_; }
    const std::vector<RatMatrix>& generators() const { return generators_; }
    const std::vector<RatMatrix>& algebra_basis() const { return basis_; }
    const EtaleAlgebra& etale() const { return *etale_; }
    const IntegerLattice& order_lattice() const { return lambda_; }
    const Int& disc_lambda() const { return disc_; }
    const std::vector<Int>& nu() const { return nu_; }
    const Int& delta() const { return delta_; }
    // [O_E : Lambda]
    const Int& index_in_maximal() const { return index_ol_; }
    // Lambda as a full-rank sublattice of Z^dim in O_E coordinates
    const IntegerLattice& lambda_in_oe() const { return lambda_oe_; }

    EmbeddedTorus conjugate(const RatMatrix& g) const;

    // Direct expansion of eta (the explicit debug path; quadratic blowup,
    // so only allowed for n <= 3 unless forced).
    Int delta_by_expansion(bool force = false) const;

    // regular trace form of E evaluated on two flattened matrix-space vectors
    // from span(E)
    Rat trace_form(const std::vector<Rat>& x_flat,
                   const std::vector<Rat>& y_flat) const;

  private:
    unsigned n_ = 0, dim_ = 0;
    std::vector<RatMatrix> generators_;
    std::vector<RatMatrix> basis_; // basis of E, basis_[0] = I
    std::shared_ptr<const EtaleAlgebra> etale_;
    RatMatrix to_etale_;   // E coords (algebra basis) -> O_E coords
    RatMatrix from_etale_; // inverse
    IntegerLattice lambda_;
    IntegerLattice lambda_oe_;
    Int disc_;
    Int index_ol_;
    std::vector<Int> nu_;
    Int delta_;

    std::vector<Rat> e_coords_of_flat(const std::vector<Rat>& flat) const;
    friend CanonicalTensor canonical_tensor(const EmbeddedTorus&);
};

inline Int disc_order(const EmbeddedTorus& T) { return T.disc_lambda(); }
inline Int delta(const EmbeddedTorus& T) { return T.delta(); }

CanonicalTensor canonical_tensor(const EmbeddedTorus& T);

HeightDiscReport verify_height_equals_disc_sample(const EmbeddedTorus& T);

// Height of g . eta computed by transforming the tensor through the induced
// action on (wedge^d of the matrix space)^tensor-2 (second route of the
// conjugation-equivariance check).
Int delta_of_transformed_tensor(const EmbeddedTorus& T, const RatMatrix& g);

} // namespace torusdisc

#endif
