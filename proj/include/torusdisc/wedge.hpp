#ifndef TORUSDISC_WEDGE_HPP
#define TORUSDISC_WEDGE_HPP

#include "torusdisc/matrix.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace torusdisc {

// Number of increasing d-subsets of {0..m-1}; lexicographic rank of one.
Int binomial(unsigned long m, unsigned long d);
std::uint64_t subset_rank(const std::vector<unsigned>& subset, unsigned m);
std::vector<unsigned> subset_unrank(std::uint64_t rank, unsigned m, unsigned d);

// Element of wedge^d Q^m on the standard basis indexed by increasing
// d-subsets in lexicographic order. Dense while C(m,d) <= 10^5, sparse
// (index -> value) above.
class WedgeVector {
  public:
    static constexpr std::uint64_t kDenseLimit = 100000;

    WedgeVector() = default;
    WedgeVector(unsigned m, unsigned d);

    unsigned ambient() const { return m_; }
    unsigned degree() const { return d_; }
    bool is_dense() const { return dense_; }
    std::uint64_t size() const; // C(m,d)

    Rat get(std::uint64_t idx) const;
    void set(std::uint64_t idx, const Rat& v);

    bool is_zero() const;
    // gcd of numerators over lcm of denominators structure:
    // content = gcd of all entries as rationals (0 for zero vector)
    Rat content() const;
    WedgeVector scaled(const Rat& c) const;

    // entries as a dense vector (throws if too large to expand)
    std::vector<Rat> to_dense() const;

    template <typename Fn>
    void for_each_nonzero(Fn&& fn) const {
        if (dense_) {
            for (std::uint64_t i = 0; i < coords_.size(); ++i)
                if (coords_[i] != 0) fn(i, coords_[i]);
        } else {
            for (const auto& [k, v] : sparse_) fn(k, v);
        }
    }

    bool operator==(const WedgeVector& o) const = default;

  private:
    unsigned m_ = 0, d_ = 0;
    bool dense_ = true;
    std::vector<Rat> coords_;
    std::map<std::uint64_t, Rat> sparse_;
};

// v_1 wedge ... wedge v_d; coordinates are the d x d minors over increasing
// column subsets; zero iff the inputs are dependent.
WedgeVector wedge(const std::vector<std::vector<Rat>>& vectors, unsigned m);

// Least positive n with n*v integral: lcm of reduced denominators. (The set
// of valid n is upward-closed under multiples, so "least" is the only
// normalization that yields a finite height; 1 for integral v.)
Int finite_height(const std::vector<Rat>& v);
Int finite_height(const WedgeVector& v);

} // namespace torusdisc

#endif
