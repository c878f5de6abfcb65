#ifndef TORUSDISC_FINITERING_HPP
#define TORUSDISC_FINITERING_HPP

#include "torusdisc/errors.hpp"
#include "torusdisc/etale.hpp"
#include "torusdisc/lattice.hpp"

#include <cstdint>
#include <vector>

namespace torusdisc {

// O / p^k O for the maximal order O of an etale algebra, together with the
// image subring S = Lambda / p^k O of a finite-index suborder. Elements are
// residue vectors in O_E coordinates; multiplication comes from the integer
// structure constants of O_E.
class FiniteRing {
  public:
    // lambda_in_oe: full-rank sublattice of Z^N in O_E coordinates with
    // p^k O_p inside Lambda_p (the caller picks k accordingly).
    FiniteRing(const EtaleAlgebra& E, const IntegerLattice& lambda_in_oe,
               const Int& p, unsigned k);

    const Int& modulus() const { return q_; } // p^k
    const Int& prime() const { return p_; }
    unsigned exponent() const { return k_; }
    unsigned dim() const { return n_; }
    // |O / p^k O| = p^(kN)
    const Int& size() const { return size_; }
    // |S|
    const Int& subring_size() const { return sub_size_; }

    using Elem = std::vector<Int>; // entries in [0, p^k)

    Elem one() const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem pow(const Elem& x, const Int& e) const;
    bool is_unit(const Elem& x) const; // invertible mod p
    bool in_subring(const Elem& x) const;

    // iterate all ring elements (throws modulus_too_large past the budget)
    template <typename Fn>
    void for_each_element(std::uint64_t budget, Fn&& fn) const {
        require_budget(budget);
        Elem x(n_, Int(0));
        for (;;) {
            fn(const_cast<const Elem&>(x));
            unsigned pos = 0;
            while (pos < n_) {
                x[pos] += 1;
                if (x[pos] < q_) break;
                x[pos] = 0;
                ++pos;
            }
            if (pos == n_) break;
        }
    }

    // iterate the subring S via coset representatives of its HNF basis
    template <typename Fn>
    void for_each_subring_element(std::uint64_t budget, Fn&& fn) const {
        if (sub_size_ > Int(static_cast<unsigned long>(budget)))
            throw modulus_too_large("subring enumeration exceeds the budget");
        const IntMat& H = sub_basis_;
        std::vector<Int> limits(n_);
        for (unsigned i = 0; i < n_; ++i) limits[i] = q_ / H.at(i, i);
        std::vector<Int> c(n_, Int(0));
        Elem x(n_);
        for (;;) {
            for (unsigned j = 0; j < n_; ++j) {
                Int acc(0);
                for (unsigned i = 0; i < n_; ++i) acc += c[i] * H.at(i, j);
                Int r;
                mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), q_.get_mpz_t());
                x[j] = r;
            }
            fn(const_cast<const Elem&>(x));
            unsigned pos = 0;
            while (pos < n_) {
                c[pos] += 1;
                if (c[pos] < limits[pos]) break;
                c[pos] = 0;
                ++pos;
            }
            if (pos == n_) break;
        }
    }

    // unit counts by exhaustive enumeration
    Int count_units(std::uint64_t budget) const;
    Int count_subring_units(std::uint64_t budget) const;

    // unit counts via the local factorization of the semisimple quotient:
    // #R^x = |R| * prod (1 - 1/|R/m|) over maximal ideals. Exact; no
    // enumeration. Works for both the full ring and the subring.
    Int count_units_fast() const;
    Int count_subring_units_fast() const;

    // materialize the unit group (element list)
    std::vector<Elem> units(std::uint64_t budget) const;

  private:
    const EtaleAlgebra* E_;
    unsigned n_ = 0, k_ = 0;
    Int p_, q_, size_, sub_size_;
    IntMat sub_basis_; // HNF basis of (Lambda + p^k Z^N) with p^k I adjoined
    std::vector<Int> mult_; // structure constants mod q

    void require_budget(std::uint64_t budget) const;
    // residue degrees of the maximal ideals of the F_p-algebra spanned by a
    // sublattice basis (rows, mod p)
    std::vector<unsigned> residue_degrees(const IntMat& basis_rows) const;
};

} // namespace torusdisc

#endif
