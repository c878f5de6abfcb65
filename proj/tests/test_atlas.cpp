#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusdisc/atlas.hpp"
#include "torusdisc/errors.hpp"

#include <set>

using namespace torusdisc;

namespace {

IntPoly poly(std::initializer_list<int> ascending) {
    std::vector<Int> c;
    for (int v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntMat mat(std::initializer_list<std::initializer_list<int>> rows) {
    IntMat m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (int v : r) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

Perm perm(std::initializer_list<std::uint8_t> v) { return Perm(v); }

} // namespace

TEST_CASE("fixed lattices") {
    // U = <(12)> inside S_3
    auto U = PermGroup::generated(3, {perm({1, 0, 2})});
    auto L = fixed_lattice(U);
    CHECK(L.rank() == 2);
    CHECK(L == hnf(mat({{1, 1, 0}, {0, 0, 1}})));

    auto Ltriv = fixed_lattice(PermGroup::trivial(4));
    CHECK(Ltriv == IntegerLattice::full(4));

    auto Ls3 = fixed_lattice(PermGroup::symmetric(3));
    CHECK(Ls3 == hnf(mat({{1, 1, 1}})));
}

TEST_CASE("rank of the fixed lattice counts orbits") {
    for (unsigned N = 2; N <= 5; ++N)
        for (const auto& cls : subgroup_conjugacy_classes(N)) {
            auto L = fixed_lattice(cls.rep);
            CHECK(L.rank() == cls.rep.orbits().size());
        }
}

TEST_CASE("fixed lattice is monotone under subgroup inclusion") {
    auto U = PermGroup::generated(4, {perm({1, 0, 2, 3})});
    auto V = PermGroup::generated(4, {perm({1, 0, 2, 3}), perm({0, 1, 3, 2})});
    auto LU = fixed_lattice(U);
    auto LV = fixed_lattice(V);
    for (std::size_t i = 0; i < LV.rank(); ++i)
        CHECK(LU.contains(LV.basis().row(i)));
}

TEST_CASE("subgroup conjugacy classes of small symmetric groups") {
    CHECK(subgroup_conjugacy_classes(2).size() == 2);
    CHECK(subgroup_conjugacy_classes(3).size() == 4);
    CHECK(subgroup_conjugacy_classes(4).size() == 11);
    CHECK(subgroup_conjugacy_classes(5).size() == 19);
    CHECK_THROWS_AS(subgroup_conjugacy_classes(6), degree_too_large);
}

TEST_CASE("fixed lattice classes up to the Weyl action") {
    auto c2 = enumerate_fixed_lattice_classes(2);
    CHECK(c2.size() == 2);

    auto c3 = enumerate_fixed_lattice_classes(3);
    CHECK(c3.size() == 3);
    // the rank-1 diagonal class is witnessed by both C3 and S3
    bool diagonal_found = false;
    for (const auto& sc : c3)
        if (sc.rank == 1) {
            CHECK(sc.witnesses.size() == 2);
            CHECK(sc.lattice == hnf(mat({{1, 1, 1}})));
            diagonal_found = true;
        }
    CHECK(diagonal_found);

    auto c4 = enumerate_fixed_lattice_classes(4);
    CHECK(c4.size() == 5);
}

TEST_CASE("weyl conjugacy witness search") {
    auto L1 = hnf(mat({{1, 1, 0}}));
    auto L2 = hnf(mat({{0, 1, 1}}));
    auto w = weyl_conjugate_test(L1, L2, 3);
    REQUIRE(w.has_value());
    // verify the witness: permuting coordinates of L1 gives L2
    IntMat B = L1.basis();
    IntMat Bp(B.rows(), 3);
    for (std::size_t r = 0; r < B.rows(); ++r)
        for (unsigned j = 0; j < 3; ++j) Bp.at(r, (*w)[j]) = B.at(r, j);
    CHECK(hnf(Bp) == L2);

    auto id = weyl_conjugate_test(L1, L1, 3);
    REQUIRE(id.has_value());
    CHECK(*id == perm_identity(3));

    CHECK(!weyl_conjugate_test(hnf(mat({{1, 1, 0}})), hnf(mat({{1, -1, 0}})), 3)
               .has_value());
}

TEST_CASE("weyl conjugacy is an equivalence on samples") {
    std::vector<IntegerLattice> ls = {
        hnf(mat({{1, 1, 0, 0}, {0, 0, 1, 1}})),
        hnf(mat({{1, 0, 1, 0}, {0, 1, 0, 1}})),
        hnf(mat({{1, 1, 1, 0}, {0, 0, 0, 1}})),
        hnf(mat({{1, 0, 0, 1}, {0, 1, 1, 0}})),
    };
    // reflexive
    for (const auto& L : ls) CHECK(weyl_conjugate_test(L, L, 4).has_value());
    // symmetric + transitive on this sample
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = 0; j < ls.size(); ++j) {
            bool ij = weyl_conjugate_test(ls[i], ls[j], 4).has_value();
            bool ji = weyl_conjugate_test(ls[j], ls[i], 4).has_value();
            CHECK(ij == ji);
        }
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = 0; j < ls.size(); ++j)
            for (std::size_t k = 0; k < ls.size(); ++k) {
                bool ij = weyl_conjugate_test(ls[i], ls[j], 4).has_value();
                bool jk = weyl_conjugate_test(ls[j], ls[k], 4).has_value();
                bool ik = weyl_conjugate_test(ls[i], ls[k], 4).has_value();
                if (ij && jk) CHECK(ik);
            }
}

TEST_CASE("stable subspace enumeration") {
    // S_3 on Q^3: 0, diagonal, sum-zero, Z^3
    auto r1 = stable_subspace_enumeration(PermGroup::symmetric(3));
    auto* list1 = std::get_if<std::vector<IntegerLattice>>(&r1);
    REQUIRE(list1);
    REQUIRE(list1->size() == 4);
    CHECK((*list1)[0].rank() == 0);
    CHECK((*list1)[1] == hnf(mat({{1, 1, 1}})));
    CHECK((*list1)[2] == hnf(mat({{1, 0, -1}, {0, 1, -1}})));
    CHECK((*list1)[3] == IntegerLattice::full(3));

    // trivial group on Q^2: not multiplicity-free
    auto r2 = stable_subspace_enumeration(PermGroup::trivial(2));
    auto* rep2 = std::get_if<IsotypicReport>(&r2);
    REQUIRE(rep2);
    CHECK(rep2->trivial_multiplicity == 2);
    CHECK(rep2->centralizer_dim == 4);

    // C2 on Q^2: 0, the two eigenlines, Z^2
    auto r3 = stable_subspace_enumeration(PermGroup::generated(2, {perm({1, 0})}));
    auto* list3 = std::get_if<std::vector<IntegerLattice>>(&r3);
    REQUIRE(list3);
    REQUIRE(list3->size() == 4);
    std::set<std::string> found;
    for (const auto& L : *list3) found.insert(L.basis().to_string());
    CHECK(found.count(hnf(mat({{1, 1}})).basis().to_string()));
    CHECK(found.count(hnf(mat({{1, -1}})).basis().to_string()));
}

TEST_CASE("stable lists always contain 0, Z^N and the fixed lattice") {
    for (unsigned N = 2; N <= 4; ++N)
        for (const auto& cls : subgroup_conjugacy_classes(N)) {
            auto r = stable_subspace_enumeration(cls.rep);
            auto* list = std::get_if<std::vector<IntegerLattice>>(&r);
            if (!list) continue;
            bool has_zero = false, has_full = false, has_fixed = false;
            auto LF = fixed_lattice(cls.rep);
            for (const auto& L : *list) {
                if (L.rank() == 0) has_zero = true;
                if (L == IntegerLattice::full(N)) has_full = true;
                if (L == LF) has_fixed = true;
            }
            CHECK(has_zero);
            CHECK(has_full);
            CHECK(has_fixed);
        }
}

TEST_CASE("galois permutation action, exact mode") {
    auto r1 = galois_perm_action(poly({1, 0, 1}), true);
    CHECK(r1.certified);
    CHECK(r1.group.order() == 2);

    auto r2 = galois_perm_action(poly({-1, -3, 0, 1}), true);
    CHECK(r2.certified);
    CHECK(r2.group.order() == 3);
    CHECK(r2.candidate_classes == std::vector<std::string>{"C3"});

    auto r3 = galois_perm_action(poly({-2, 0, 0, 1}), true);
    CHECK(r3.certified);
    CHECK(r3.group.order() == 6);

    CHECK_THROWS_AS(galois_perm_action(poly({-1, 0, 1}), true), not_irreducible);
}

TEST_CASE("galois permutation action, sampled mode") {
    // x^2 + 1: only the 2-cycle and fixed types can appear
    auto r1 = galois_perm_action(poly({1, 0, 1}), false);
    CHECK(r1.group.order() == 2);

    // x^3 - 2: S3 forced by a transposition-type and a 3-cycle type
    auto r2 = galois_perm_action(poly({-2, 0, 0, 1}), false);
    CHECK(r2.group.order() == 6);
    CHECK(r2.certified); // 2+1 types rule out C3, the only other class

    // x^3 - 3x - 1 (cyclic): sampled sees only 3-cycles and identity, so C3
    // is the smallest candidate, but S3 is never excluded
    auto r3 = galois_perm_action(poly({-1, -3, 0, 1}), false);
    CHECK(r3.group.order() == 3);
    CHECK(!r3.certified);
    CHECK(r3.candidate_classes.size() == 2);

    // sampled never contradicts exact on degree <= 4
    for (auto coeffs : {std::initializer_list<int>{1, 0, 1},
                        std::initializer_list<int>{-2, 0, 0, 1},
                        std::initializer_list<int>{1, 1, 1, 1, 1},
                        std::initializer_list<int>{-2, 0, 0, 0, 1}}) {
        auto exact = galois_perm_action(poly(coeffs), true);
        auto sampled = galois_perm_action(poly(coeffs), false);
        // observed types occur inside the exact group
        std::set<std::vector<unsigned>> have;
        for (const Perm& g : exact.group.elements()) have.insert(cycle_type(g));
        for (const auto& t : sampled.observed_types) CHECK(have.count(t));
        CHECK(sampled.group.order() <= exact.group.order());
    }

    // quintic: x^5 - x - 1 has Galois group S5; a 5-cycle plus a
    // transposition-type observation forces it
    auto r5 = galois_perm_action(poly({-1, -1, 0, 0, 0, 1}), false);
    CHECK(r5.group.order() == 120);
    CHECK(r5.certified);
}
