#ifndef TORUSDISC_LATTICE_HPP
#define TORUSDISC_LATTICE_HPP

#include "torusdisc/matrix.hpp"

#include <optional>
#include <vector>

namespace torusdisc {

// Sublattice of Z^m in canonical row Hermite normal form: positive pivots,
// entries above each pivot reduced into [0, pivot). Two equal lattices have
// bit-identical bases.
class IntegerLattice {
  public:
    IntegerLattice() = default;
    // Spans of the rows of m; zero rows dropped, rank may be < rows.
    static IntegerLattice from_rows(const IntMat& m);
    static IntegerLattice zero(std::size_t ambient);
    static IntegerLattice full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMat& basis() const { return basis_; }

    bool contains(const std::vector<Int>& v) const;
    // Coordinates of v in the basis, if v is in the lattice.
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

    bool operator==(const IntegerLattice& o) const = default;

  private:
    IntegerLattice(std::size_t ambient, IntMat basis)
        : ambient_(ambient), basis_(std::move(basis)) {}
    friend IntegerLattice hnf(const IntMat& m);

    std::size_t ambient_ = 0;
    IntMat basis_; // rank x ambient, canonical HNF
};

// Canonical row HNF of the row span of m.
IntegerLattice hnf(const IntMat& m);

// HNF of m together with a unimodular U (rows(m) x rows(m)) such that
// U * m has the HNF rows first and zero rows last.
struct HnfTransform {
    IntMat h; // rows(m) x cols(m), zero rows at the bottom
    IntMat u; // unimodular
    std::size_t rank;
};
HnfTransform hnf_with_transform(const IntMat& m);

// Elementary divisors d_1 | d_2 | ... (min(rows, cols) of them, trailing
// zeros when rank deficient).
std::vector<Int> snf_diagonal(IntMat m);

// [sup : sub]; throws not_sublattice / rank_mismatch.
Int lattice_index(const IntegerLattice& sub, const IntegerLattice& sup);

// (L tensor Q) intersect Z^ambient: the primitive sublattice with the same
// span. Idempotent.
IntegerLattice saturate(const IntegerLattice& L);

// Basis (as rows) of { x in Z^cols(A) : A x^T = 0 }. Saturated by
// construction.
IntMat kernel_basis(const IntMat& A);

// Lattice with rational basis, stored as (1/denom) * integer lattice with
// gcd(content(basis), denom) = 1.
struct RationalLattice {
    IntegerLattice scaled;
    Int denom = 1;

    static RationalLattice from_rows(const RatMatrix& rows);
    static RationalLattice from_integer(const IntegerLattice& L);
    bool contains(const std::vector<Rat>& v) const;
    std::size_t rank() const { return scaled.rank(); }
    RatMatrix basis() const;
    bool operator==(const RationalLattice& o) const = default;
};

// [sup : sub] for rational lattices with sub a finite-index sublattice of sup.
Int rational_lattice_index(const RationalLattice& sub, const RationalLattice& sup);

// B-dual { x in span(L) tensor Q : B(x, L) in Z } for a symmetric rational
// form B on the ambient space, nondegenerate on span(L);
// [dual : L] = |det Gram(B on basis of L)|. Throws degenerate_form.
RationalLattice dual_lattice(const IntegerLattice& L, const RatMatrix& B);

} // namespace torusdisc

#endif
