#ifndef TORUSDISC_ATLAS_HPP
#define TORUSDISC_ATLAS_HPP

#include "torusdisc/intpoly.hpp"
#include "torusdisc/lattice.hpp"
#include "torusdisc/perm.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace torusdisc {

// Saturated lattice of vectors fixed coordinatewise by every group element;
// rank = number of orbits. Degree cap 8.
IntegerLattice fixed_lattice(const PermGroup& U);

struct SubgroupClass {
    PermGroup rep;
    std::string label; // "o<order>n<index>"
    unsigned order;
    unsigned class_size; // number of conjugates
};

// One representative per conjugacy class of subgroups of S_N, exhaustively.
// Degree cap 5.
std::vector<SubgroupClass> subgroup_conjugacy_classes(unsigned N);

struct SubtorusClass {
    IntegerLattice lattice;
    unsigned rank;
    std::vector<std::string> witnesses; // subgroup class labels
};

// All fixed lattices L_U up to the coordinate S_N action, with witnesses.
std::vector<SubtorusClass> enumerate_fixed_lattice_classes(unsigned N);

// A permutation sigma with sigma . L1 = L2 (coordinates permuted), or
// absent. Exhaustive over S_N (N <= 8) with projector-diagonal pruning.
std::optional<Perm> weyl_conjugate_test(const IntegerLattice& L1,
                                        const IntegerLattice& L2, unsigned N);

struct IsotypicReport {
    unsigned centralizer_dim = 0; // sum of squared multiplicities
    unsigned trivial_multiplicity = 0;
    std::string note;
};

// When the permutation representation is multiplicity-free (commutative
// centralizer, so sum of squared multiplicities equals the number of
// irreducible summands), the finite list of stable saturated sublattices;
// otherwise the isotypic report. Degree cap 6.
using StableSubspaces = std::variant<std::vector<IntegerLattice>, IsotypicReport>;
StableSubspaces stable_subspace_enumeration(const PermGroup& U);

struct GaloisPermReport {
    PermGroup group; // exact group, or the smallest consistent candidate
    bool certified = false;
    std::vector<std::string> candidate_classes;
    std::vector<std::vector<unsigned>> observed_types; // deduplicated, sorted
    std::string note;
};

// Exact mode (degree <= 4): discriminant-square test and resolvent cubic.
// Sampled mode: Frobenius cycle types at the first 50 good primes; the
// candidate set is every transitive class of S_N consistent with the
// observations (enumerated for N <= 5), certified only when forced.
GaloisPermReport galois_perm_action(const IntPoly& f, bool exact_mode);

} // namespace torusdisc

#endif
