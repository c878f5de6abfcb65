#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusdisc/equiv.hpp"
#include "torusdisc/errors.hpp"

using namespace torusdisc;

namespace {

SampledFunction fn(std::vector<Rat> values) {
    std::vector<std::string> labels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) labels[i] = std::to_string(i);
    return SampledFunction::of(std::move(labels), std::move(values));
}

SampledFunction squares(long lo, long hi, long scale = 1) {
    std::vector<Rat> v;
    for (long i = lo; i <= hi; ++i) v.push_back(Rat(scale * i * i));
    std::vector<std::string> labels;
    for (long i = lo; i <= hi; ++i) labels.push_back(std::to_string(i));
    return SampledFunction::of(std::move(labels), std::move(v));
}

SampledFunction identity_fn(long lo, long hi) {
    std::vector<Rat> v;
    std::vector<std::string> labels;
    for (long i = lo; i <= hi; ++i) {
        v.push_back(Rat(i));
        labels.push_back(std::to_string(i));
    }
    return SampledFunction::of(std::move(labels), std::move(v));
}

} // namespace

TEST_CASE("fit domination examples") {
    // f = i^2 vs g = i: (a, c) = (2, 1)
    auto w1 = fit_domination(squares(2, 100), identity_fn(2, 100));
    CHECK(w1.exponent == 2);
    CHECK(w1.constant == 1);

    // f = g: (1, 1)
    auto g = identity_fn(2, 50);
    auto w2 = fit_domination(g, g);
    CHECK(w2.exponent == 1);
    CHECK(w2.constant == 1);

    // f = 4 i^2 vs g = i: (2, 4)
    auto w3 = fit_domination(squares(2, 100, 4), identity_fn(2, 100));
    CHECK(w3.exponent == 2);
    CHECK(w3.constant == 4);
}

TEST_CASE("fitted witnesses verify exactly") {
    auto f = fn({Rat(3), Rat(17), Rat(19), Rat(120), Rat(7)});
    auto g = fn({Rat(2), Rat(5), Rat(6), Rat(11), Rat(3)});
    auto w = fit_domination(f, g);
    CHECK(verify_witness(f, g, w));
    // and in the other direction
    auto w2 = fit_domination(g, f);
    CHECK(verify_witness(g, f, w2));
}

TEST_CASE("all-ones failure") {
    auto f = fn({Rat(2), Rat(3)});
    auto g = fn({Rat(1), Rat(1)});
    CHECK_THROWS_AS(fit_domination(f, g), all_ones);
    // mixed: g = 1 rows only bound the constant
    auto g2 = fn({Rat(1), Rat(2)});
    auto w = fit_domination(f, g2);
    CHECK(verify_witness(f, g2, w));
    CHECK(w.constant >= 2);
}

TEST_CASE("grid minimality spot check") {
    // crafted so that at a - 1/1000 no constant up to c * 10^6 works
    Rat big = pow_rat(Rat(2), 20000);
    auto g = fn({Rat(2), big});
    auto f = fn({Rat(4), big * big});
    auto w = fit_domination(f, g);
    CHECK(w.exponent == 2);
    CHECK(w.constant == 1);
    DominationWitness below{make_rat(Int(1999), Int(1000)),
                            w.constant * Rat(1000000)};
    CHECK(!verify_witness(f, g, below));
}

TEST_CASE("check_equivalence produces both witnesses or a certificate") {
    auto f = squares(2, 60);
    auto g = identity_fn(2, 60);
    auto rep = check_equivalence(f, g);
    REQUIRE(rep.equivalent);
    CHECK(rep.fg->exponent == 2);
    CHECK(rep.gf->exponent <= 1);
    CHECK(rep.note.find("grid") != std::string::npos);

    // f = g: (1,1) both ways
    auto rep2 = check_equivalence(g, g);
    REQUIRE(rep2.equivalent);
    CHECK(rep2.fg->exponent == 1);
    CHECK(rep2.fg->constant == 1);
    CHECK(rep2.gf->exponent == 1);

    // 2^i vs i: on a long enough sample no witness fits under the cap;
    // certificate at the largest i
    std::vector<Rat> pows, ids;
    std::vector<std::string> labels;
    for (long i = 1; i <= 160; ++i) {
        pows.push_back(pow_rat(Rat(2), i));
        ids.push_back(Rat(i));
        labels.push_back(std::to_string(i));
    }
    auto rep3 = check_equivalence(SampledFunction::of(labels, pows),
                                  SampledFunction::of(labels, ids));
    CHECK(!rep3.equivalent);
    REQUIRE(rep3.violation_index.has_value());
    CHECK(*rep3.violation_index == 159); // the largest sample index
}

TEST_CASE("dichotomy combine") {
    // a1 = a2 = 1, c1 = c2 = 1: g h <= f^3
    auto f = fn({Rat(4), Rat(9), Rat(25)});
    auto g = fn({Rat(2), Rat(3), Rat(5)});
    auto h = fn({Rat(8), Rat(27), Rat(125)});
    DominationWitness w1{Rat(1), Rat(1)}; // h <= f g = 8, 27, 125: equality
    DominationWitness w2{Rat(1), Rat(1)}; // g <= f
    auto out = dichotomy_combine(w1, w2, f, g, h);
    CHECK(out.exponent == 3);
    CHECK(out.constant == 1);
    CHECK(verify_witness(pointwise_product(g, h), f, out));

    // a1 = 0: constants pass through
    DominationWitness w1b{Rat(0), Rat(125)};
    auto out2 = dichotomy_combine(w1b, w2, f, g, h);
    CHECK(out2.exponent == 1);
    CHECK(out2.constant == 125);

    // a1 = 2, a2 = 1: exponent 5
    DominationWitness w1c{Rat(2), Rat(1)};
    auto out3 = dichotomy_combine(w1c, w2, f, g, h);
    CHECK(out3.exponent == 5);

    // invalid witnesses are rejected
    DominationWitness bad{Rat(0), Rat(1)};
    CHECK_THROWS_AS(dichotomy_combine(bad, w2, f, g, h), invalid_witness);
}

TEST_CASE("dichotomy exponent identity on randomized valid pairs") {
    SplitMix64 rng(777);
    FitOptions small_grid;
    small_grid.exponent_grid = 8;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 3 + rng.below(5);
        std::vector<Rat> fv, gv, hv;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            fv.push_back(Rat(2 + static_cast<long>(rng.below(50))));
            gv.push_back(Rat(1 + static_cast<long>(rng.below(30))));
            hv.push_back(Rat(1 + static_cast<long>(rng.below(40))));
            labels.push_back(std::to_string(i));
        }
        auto f = SampledFunction::of(labels, fv);
        auto g = SampledFunction::of(labels, gv);
        auto h = SampledFunction::of(labels, hv);
        DominationWitness w1, w2;
        try {
            w1 = fit_domination(h, pointwise_product(f, g), small_grid);
            w2 = fit_domination(g, f, small_grid);
        } catch (const all_ones&) {
            continue;
        }
        auto out = dichotomy_combine(w1, w2, f, g, h, small_grid);
        CHECK(out.exponent ==
              w2.exponent + w1.exponent + w1.exponent * w2.exponent);
        CHECK(verify_witness(pointwise_product(g, h), f, out));
    }
}

TEST_CASE("transitivity composition") {
    auto f = squares(2, 30);
    auto g = identity_fn(2, 30);
    std::vector<Rat> roots;
    std::vector<std::string> labels;
    for (long i = 2; i <= 30; ++i) {
        roots.push_back(Rat(i));
        labels.push_back(std::to_string(i));
    }
    auto h = SampledFunction::of(labels, roots); // h = g here
    auto w_fg = fit_domination(f, g);
    auto w_gh = fit_domination(g, h);
    auto out = compose_transitive(w_fg, w_gh, f, g, h);
    CHECK(out.exponent == w_fg.exponent * w_gh.exponent);
    CHECK(verify_witness(f, h, out));
}

TEST_CASE("max product bracket") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.below(6);
        std::vector<Rat> fv, gv;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            fv.push_back(Rat(1 + static_cast<long>(rng.below(100))));
            gv.push_back(Rat(1 + static_cast<long>(rng.below(100))));
            labels.push_back(std::to_string(i));
        }
        auto f = SampledFunction::of(labels, fv);
        auto g = SampledFunction::of(labels, gv);
        auto br = max_product_bracket(f, g);
        CHECK(br.max_le_product.exponent == 1);
        CHECK(br.max_le_product.constant == 1);
        CHECK(br.product_le_max_sq.exponent == 2);
        CHECK(br.product_le_max_sq.constant == 1);
    }
    // f constant 1: max = g, product = g
    auto ones = fn({Rat(1), Rat(1), Rat(1)});
    auto g = fn({Rat(2), Rat(7), Rat(3)});
    auto br = max_product_bracket(ones, g);
    CHECK(verify_witness(pointwise_max(ones, g), pointwise_product(ones, g),
                         DominationWitness{Rat(1), Rat(1)}));
    (void)br;
}
