#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusdisc/adelic.hpp"
#include "torusdisc/errors.hpp"

#include <map>

using namespace torusdisc;

namespace {

IntPoly poly(std::initializer_list<int> ascending) {
    std::vector<Int> c;
    for (int v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

// Gaussian torus with order Z + m i Z (conjugate of the regular embedding
// by diag(1, m))
EmbeddedTorus gaussian_torus(long m) {
    RatMatrix J{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
    auto T = EmbeddedTorus::from_generators(2, {J});
    if (m == 1) return T;
    RatMatrix g(2, 2);
    g.at(0, 0) = 1;
    g.at(1, 1) = Rat(m);
    return T.conjugate(g);
}

// Independent oracle: units of (Z + m i Z) / p^k in direct complex-integer
// arithmetic a + b i, a, b mod p^k, membership b = 0 mod m-part.
struct GaussOracle {
    long pk;   // p^k
    long p;
    long mloc; // p-part of m

    // count units of Z[i]/p^k: pairs (a, b) with a + bi invertible
    long units_O() const {
        long count = 0;
        for (long a = 0; a < pk; ++a)
            for (long b = 0; b < pk; ++b)
                if ((a * a + b * b) % p != 0) ++count;
        return count;
    }
    // units of the image of Z + m i Z: b must be divisible by mloc
    long units_sub() const {
        long count = 0;
        for (long a = 0; a < pk; ++a)
            for (long b = 0; b < pk; b += mloc)
                if ((a * a + b * b) % p != 0) ++count;
        return count;
    }
};

long p_part(long m, long p) {
    long r = 1;
    while (m % p == 0) {
        m /= p;
        r *= p;
    }
    return r;
}

} // namespace

TEST_CASE("conductor exponents") {
    auto T3 = gaussian_torus(3);
    auto pair3 = OrderPair::of(T3);
    CHECK(conductor_exponent(pair3, Int(3)) == 1);

    auto T1 = gaussian_torus(1);
    CHECK(conductor_exponent(OrderPair::of(T1), Int(5)) == 0);

    auto T4 = gaussian_torus(4);
    CHECK(conductor_exponent(OrderPair::of(T4), Int(2)) == 2);

    auto T6 = gaussian_torus(6);
    auto pair6 = OrderPair::of(T6);
    CHECK(conductor_exponent(pair6, Int(2)) == 1);
    CHECK(conductor_exponent(pair6, Int(3)) == 1);
    CHECK(conductor_exponent(pair6, Int(5)) == 0);
}

TEST_CASE("local unit indices on small gaussian suborders") {
    // (Z[i], Z+3iZ, 3) -> 4 (8 units over 2)
    auto r3 = local_unit_index(OrderPair::of(gaussian_torus(3)), Int(3));
    CHECK(r3.units_O == 8);
    CHECK(r3.units_Lambda == 2);
    CHECK(r3.index == 4);

    // (Z[i], Z+5iZ, 5) -> 4 (16 over 4)
    auto r5 = local_unit_index(OrderPair::of(gaussian_torus(5)), Int(5));
    CHECK(r5.units_O == 16);
    CHECK(r5.units_Lambda == 4);
    CHECK(r5.index == 4);

    // (Z[i], Z+2iZ, 2) -> 2 (units {1, i} over {1})
    auto r2 = local_unit_index(OrderPair::of(gaussian_torus(2)), Int(2));
    CHECK(r2.units_O == 2);
    CHECK(r2.units_Lambda == 1);
    CHECK(r2.index == 2);
}

TEST_CASE("local index against the independent complex-integer oracle") {
    for (long m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 25, 30}) {
        auto T = gaussian_torus(m);
        auto pair = OrderPair::of(T);
        for (long p : {2l, 3l, 5l}) {
            if (m % p != 0) {
                auto rep = local_unit_index(pair, Int(p));
                CHECK(rep.index == 1);
                continue;
            }
            unsigned k = conductor_exponent(pair, Int(p));
            long pk = 1;
            for (unsigned i = 0; i < k; ++i) pk *= p;
            GaussOracle oracle{pk, p, p_part(m, p)};
            auto rep = local_unit_index(pair, Int(p));
            CHECK(rep.units_O == Int(oracle.units_O()));
            CHECK(rep.units_Lambda == Int(oracle.units_sub()));
            CHECK(rep.index * rep.units_Lambda == rep.units_O);
        }
    }
}

TEST_CASE("fast path agrees with enumeration") {
    for (long m : {3, 4, 6, 9, 10, 15, 49}) {
        auto T = gaussian_torus(m);
        auto pair = OrderPair::of(T);
        for (const auto& [p, e] : factor_integer(Int(m))) {
            auto enumerated = local_unit_index(pair, p);
            REQUIRE(enumerated.enumerated);
            unsigned k = std::max(conductor_exponent(pair, p), 1u);
            FiniteRing R(T.etale(), T.lambda_in_oe(), p, k);
            CHECK(R.count_units_fast() == enumerated.units_O);
            CHECK(R.count_subring_units_fast() == enumerated.units_Lambda);
        }
    }
    // split algebra Q x Q with a nonmaximal diagonal order: p = 2 on Q(i)xQ(i)
    auto T = EmbeddedTorus::embed_regular({{poly({1, 0, 1}), 2}});
    auto pair = OrderPair::of(T);
    // maximal: all local indices 1, fast path must agree
    FiniteRing R(T.etale(), T.lambda_in_oe(), Int(2), 1);
    CHECK(R.count_units_fast() == R.count_units(1 << 20));
    FiniteRing R3(T.etale(), T.lambda_in_oe(), Int(3), 1);
    CHECK(R3.count_units_fast() == R3.count_units(1 << 20));
}

TEST_CASE("index stability under larger k") {
    for (long m : {2, 3, 6, 9}) {
        auto T = gaussian_torus(m);
        auto pair = OrderPair::of(T);
        for (const auto& [p, e] : factor_integer(Int(m))) {
            unsigned k = std::max(conductor_exponent(pair, p), 1u);
            FiniteRing R1(T.etale(), T.lambda_in_oe(), p, k);
            FiniteRing R2(T.etale(), T.lambda_in_oe(), p, k + 1);
            Int i1 = R1.count_units(1 << 20) / R1.count_subring_units(1 << 20);
            Int i2 = R2.count_units(1 << 20) / R2.count_subring_units(1 << 20);
            CHECK(i1 == i2);
        }
    }
}

TEST_CASE("global index multiplies local indices") {
    // Z + 6iZ -> 8 (p=2: 2, p=3: 4)
    CHECK(global_index(OrderPair::of(gaussian_torus(6))) == 8);
    CHECK(global_index(OrderPair::of(gaussian_torus(1))) == 1);
    CHECK(global_index(OrderPair::of(gaussian_torus(3))) == 4);
}

TEST_CASE("support property: index = 1 iff p does not divide the index") {
    for (long m : {1, 2, 3, 4, 5, 6, 10, 12}) {
        auto T = gaussian_torus(m);
        auto pair = OrderPair::of(T);
        for (long p : {2l, 3l, 5l, 7l}) {
            auto rep = local_unit_index(pair, Int(p));
            CHECK((rep.index == 1) == (m % p != 0));
        }
    }
}

TEST_CASE("multiplicativity across etale blocks") {
    // E = Q(i) x Q(i) with Lambda = (Z+3iZ) x (Z+3iZ), block diagonal
    // suborder of index 9: local index at 3 should be 4 * 4 = 16
    IntMat M = IntMat::identity(4);
    M.at(1, 1) = 3;
    M.at(3, 3) = 3;
    auto T = EmbeddedTorus::embed_regular({{poly({1, 0, 1}), 2}}, M);
    CHECK(T.index_in_maximal() == 9);
    auto rep = local_unit_index(OrderPair::of(T), Int(3));
    CHECK(rep.index == 16);

    auto single = local_unit_index(OrderPair::of(gaussian_torus(3)), Int(3));
    CHECK(rep.index == single.index * single.index);
}

TEST_CASE("power indices") {
    // (Z[i], Z+3iZ, 3, 2) -> 2
    CHECK(power_index(OrderPair::of(gaussian_torus(3)), Int(3), 2) == 2);
    // h = 1 equals the local index
    CHECK(power_index(OrderPair::of(gaussian_torus(3)), Int(3), 1) == 4);
    // (Z[i], Z+5iZ, 5, 2) -> 2
    CHECK(power_index(OrderPair::of(gaussian_torus(5)), Int(5), 2) == 2);
}

TEST_CASE("disc_K reports") {
    auto r1 = disc_K(gaussian_torus(1));
    CHECK(r1.d_mode == "exact");
    CHECK(r1.d_value == 4);
    CHECK(r1.disc_value == 4);
    CHECK(r1.delta == 4);

    auto r2 = disc_K(gaussian_torus(2));
    CHECK(r2.disc_value == 8);
    CHECK(r2.delta == 16);

    auto r3 = disc_K(gaussian_torus(3));
    CHECK(r3.disc_value == 16);
    CHECK(r3.delta == 36);
    CHECK(r3.disc_value >= r3.d_value);

    // non-Galois cubic factor: bounded mode
    auto Tc = EmbeddedTorus::embed_regular({{poly({-2, 0, 0, 1}), 1}});
    auto rc = disc_K(Tc);
    CHECK(rc.d_mode == "bounded-by-lemma");
    CHECK(rc.d_value == 108);
}

TEST_CASE("documented finding: unit index can exceed the additive index") {
    // Lambda = Z + 3iZ at p = 3: [O_p^x : Lambda_p^x] = 4 > 3 = [O : Lambda];
    // recorded as a diagnostic (brute-force confirmed by the oracle above),
    // not asserted as an inequality in either direction
    auto T = gaussian_torus(3);
    auto rep = local_unit_index(OrderPair::of(T), Int(3));
    Int additive = OrderPair::of(T).index();
    CHECK(additive == 3);
    CHECK(rep.index == 4);
    CHECK(rep.index > additive);
}

TEST_CASE("eyext scan over the conductor-p gaussian family") {
    std::vector<EmbeddedTorus> keep;
    std::vector<std::pair<const EmbeddedTorus*, Int>> family;
    for (long p : {2, 3, 5, 7, 11, 13}) keep.push_back(gaussian_torus(p));
    {
        std::size_t i = 0;
        for (long p : {2, 3, 5, 7, 11, 13}) family.emplace_back(&keep[i++], Int(p));
    }
    auto rep = eyext_scan(family);
    REQUIRE(rep.rows.size() == 6);
    // split p: p-1, inert p: p+1, p=2: 2
    std::map<long, long> expected = {{2, 2}, {3, 4}, {5, 4}, {7, 8}, {11, 12}, {13, 12}};
    for (const auto& row : rep.rows) {
        CHECK(row.index == Int(expected[row.p.get_si()]));
        CHECK(row.ratio == make_rat(row.p, row.index));
        // Thm-8.1 shape at c = 2
        CHECK(2 * row.index >= row.p);
    }
    CHECK(rep.min_c == make_rat(Int(5), Int(4)));

    // trivial family: empty nontrivial set
    auto Tmax = gaussian_torus(1);
    std::vector<std::pair<const EmbeddedTorus*, Int>> fam2 = {
        {&Tmax, Int(2)}, {&Tmax, Int(3)}};
    auto rep2 = eyext_scan(fam2);
    CHECK(rep2.rows.empty());
}
