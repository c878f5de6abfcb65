#ifndef TORUSDISC_ADELIC_HPP
#define TORUSDISC_ADELIC_HPP

#include "torusdisc/finitering.hpp"
#include "torusdisc/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusdisc {

constexpr std::uint64_t kDefaultBudget = 1u << 20;

// A finite-index suborder Lambda of the maximal order of an etale algebra,
// both in O_E coordinates.
struct OrderPair {
    const EtaleAlgebra* E;
    IntegerLattice lambda; // full rank sublattice of Z^N, HNF

    static OrderPair of(const EmbeddedTorus& T) {
        return OrderPair{&T.etale(), T.lambda_in_oe()};
    }
    // [O_E : Lambda]
    Int index() const;
};

// Least k >= 0 with p^k O_p inside Lambda_p, i.e. the p-valuation of the
// exponent of O/Lambda; 0 iff Lambda_p = O_p.
unsigned conductor_exponent(const OrderPair& pair, const Int& p);

struct LocalIndexReport {
    Int p;
    unsigned k = 0;      // exponent used (max(conductor_exponent, 1))
    Int units_O;         // #(O/p^k O)^x
    Int units_Lambda;    // #(Lambda/p^k O)^x
    Int index;           // units_O / units_Lambda
    std::optional<Int> power_index; // per h, when requested
    bool enumerated = false;        // brute force vs factored fast path
};

// [O_p^x : Lambda_p^x] via unit counts of the residue rings; enumeration
// under the budget, factored unit-density path above it.
LocalIndexReport local_unit_index(const OrderPair& pair, const Int& p,
                                  std::uint64_t budget = kDefaultBudget);

// product of local indices over primes dividing [O : Lambda]
Int global_index(const OrderPair& pair, std::uint64_t budget = kDefaultBudget);

// [Theta : Theta cap Lambda_p^x] for Theta = h-th powers of (O/p^k O)^x
// (closed under multiplication and verified as such). Requires enumeration.
Int power_index(const OrderPair& pair, const Int& p, unsigned h,
                std::uint64_t budget = kDefaultBudget);

struct DiscReport {
    Int d_E;
    std::string d_mode; // "exact" | "bounded-by-lemma"
    Int d_value;        // |d_L| when exact, d_E otherwise
    Int global_index;
    Int disc_value; // d_value * global_index
    Int delta;
    Int index_OL;
    std::vector<LocalIndexReport> locals;
};

// disc_K(T) for K = GL(n, Zhat): d * [T_max : T(A_f) cap K]. The splitting
// discriminant is exact when every non-rational factor is Galois-certified
// and they all share one defining polynomial (so the compositum is that
// field); otherwise d_E stands in per the splitting-field comparison bounds.
DiscReport disc_K(const EmbeddedTorus& T, std::uint64_t budget = kDefaultBudget);

struct EyextRow {
    Int p;
    Int index;
    Rat ratio; // p / index
};

struct EyextReport {
    std::vector<EyextRow> rows; // nontrivial local indices only
    Rat min_c;                  // least c with index >= p/c across the rows
};

EyextReport eyext_scan(
    const std::vector<std::pair<const EmbeddedTorus*, Int>>& family,
    std::uint64_t budget = kDefaultBudget);

} // namespace torusdisc

#endif
