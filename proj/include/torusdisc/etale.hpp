#ifndef TORUSDISC_ETALE_HPP
#define TORUSDISC_ETALE_HPP

#include "torusdisc/numfield.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torusdisc {

// Finite product of number fields with the direct-sum trace form on the
// maximal-order basis (per-copy integral bases, concatenated).
class EtaleAlgebra {
  public:
    struct Factor {
        std::shared_ptr<const NumberField> field;
        unsigned multiplicity;
    };

    static EtaleAlgebra from_factors(
        const std::vector<std::pair<IntPoly, unsigned>>& factors);

    unsigned dim() const { return dim_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const RatMatrix& trace_gram() const { return gram_; }

    // |d_E| = prod |d_{L_i}|^{m_i}
    const Int& discriminant() const { return disc_abs_; }
    int disc_sign() const { return disc_sign_; }

    // coordinates of 1 in the O_E basis (integer entries)
    std::vector<Rat> one() const;
    std::vector<Rat> multiply(const std::vector<Rat>& x,
                              const std::vector<Rat>& y) const;
    // integer structure constants c[(i*N+j)*N+k] of the O_E basis
    const std::vector<Int>& structure() const { return mult_; }
    Rat trace(const std::vector<Rat>& coords) const;

    // block layout: (factor index, copy, offset, size)
    struct Block {
        unsigned factor, copy, offset, size;
    };
    const std::vector<Block>& blocks() const { return blocks_; }

  private:
    std::vector<Factor> factors_;
    unsigned dim_ = 0;
    std::vector<std::string> labels_;
    RatMatrix gram_;
    Int disc_abs_ = 1;
    int disc_sign_ = 1;
    std::vector<Int> mult_;
    std::vector<Block> blocks_;
};

// d_E = prod |d_{L_i}|^{m_i}
Int etale_discriminant(const EtaleAlgebra& E);

// c(n) = n^(n + n!) * n!  (splitting-field comparison constant)
Int c_bound(unsigned n);

// Bracket for the splitting-field discriminant: floor(d_E^(1/c(N))) below,
// d_E^(c(N)) above. The upper value is expanded only while it stays under a
// size cap; containment tests never need the expansion.
struct DiscBounds {
    Int lower;
    Int base;     // d_E
    Int exponent; // c(N)
    std::optional<Int> expanded_upper;

    bool contains(const Int& dL_abs) const;
};

DiscBounds splitting_disc_bounds(const EtaleAlgebra& E);

// Signed d_K when K is its own splitting field (always for degree <= 2;
// degree 3 iff disc is a square; degree 4 iff the Galois type is C4 or V4),
// absent otherwise. Degree cap 4.
std::optional<Int> exact_splitting_disc(const NumberField& K);

} // namespace torusdisc

#endif
