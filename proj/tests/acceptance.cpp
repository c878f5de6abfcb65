// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are exact integer/rational comparisons throughout.

#include "torusdisc/adelic.hpp"
#include "torusdisc/atlas.hpp"
#include "torusdisc/commands.hpp"
#include "torusdisc/equiv.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace torusdisc;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
              << detail << "\n";
    if (!pass) ++g_failures;
}

IntPoly poly(std::initializer_list<int> ascending) {
    std::vector<Int> c;
    for (int v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

RatMatrix diag_conj(unsigned n, long m) {
    RatMatrix g = RatMatrix::identity(n);
    for (unsigned i = 1; i < n; ++i) g.at(i, i) = Rat(m);
    return g;
}

EmbeddedTorus gaussian_torus(long m) {
    auto T = EmbeddedTorus::embed_regular({{poly({1, 0, 1}), 1}});
    return m == 1 ? T : T.conjugate(diag_conj(2, m));
}

// Independent complex-integer oracle for (Z + m i Z)_p unit counts.
struct GaussOracle {
    long pk, p, mloc;
    long units_O() const {
        long c = 0;
        for (long a = 0; a < pk; ++a)
            for (long b = 0; b < pk; ++b)
                if ((a * a + b * b) % p != 0) ++c;
        return c;
    }
    long units_sub() const {
        long c = 0;
        for (long a = 0; a < pk; ++a)
            for (long b = 0; b < pk; b += mloc)
                if ((a * a + b * b) % p != 0) ++c;
        return c;
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

Int oracle_disc(long m) {
    // 4 * product of local indices, each from the complex-integer oracle
    Int out(4);
    for (long p : {2l, 3l, 5l, 7l, 11l, 13l, 17l, 19l, 23l, 29l, 31l, 37l, 41l,
                   43l, 47l, 53l, 59l, 61l, 67l, 71l, 73l, 79l, 83l, 89l, 97l,
                   101l, 103l, 107l, 109l, 113l, 127l, 131l, 137l, 139l, 149l,
                   151l, 157l, 163l, 167l, 173l, 179l, 181l, 191l, 193l, 197l,
                   199l}) {
        if (m % p != 0) continue;
        long pk = p_part(m, p);
        GaussOracle o{pk, p, pk};
        out *= Int(o.units_O()) / Int(o.units_sub());
    }
    return out;
}

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, EmbeddedTorus>> instances;
    auto add = [&](const std::string& label, EmbeddedTorus T) {
        instances.emplace_back(label, std::move(T));
    };
    // regular representations
    add("Q(i)", EmbeddedTorus::embed_regular({{poly({1, 0, 1}), 1}}));
    add("Q(sqrt5)", EmbeddedTorus::embed_regular({{poly({-1, -1, 1}), 1}}));
    add("Q(sqrt-3)", EmbeddedTorus::embed_regular({{poly({3, 0, 1}), 1}}));
    add("Q(sqrt2)", EmbeddedTorus::embed_regular({{poly({-2, 0, 1}), 1}}));
    add("Q(zeta5)", EmbeddedTorus::embed_regular({{poly({1, 1, 1, 1, 1}), 1}}));
    add("QxQ", EmbeddedTorus::embed_regular({{poly({-1, 1}), 2}}));
    // conductor-2 suborder of Q(zeta5) in GL(4)
    {
        IntMat M = IntMat::identity(4);
        for (unsigned i = 1; i < 4; ++i) M.at(i, i) = 2;
        add("Q(zeta5):Z+2O",
            EmbeddedTorus::embed_regular({{poly({1, 1, 1, 1, 1}), 1}}, M));
    }
    // diagonal-conjugate suborder families, conductors m <= 12
    for (long m = 2; m <= 12; ++m) {
        add("Q(i)#m=" + std::to_string(m),
            EmbeddedTorus::embed_regular({{poly({1, 0, 1}), 1}})
                .conjugate(diag_conj(2, m)));
        add("Q(sqrt5)#m=" + std::to_string(m),
            EmbeddedTorus::embed_regular({{poly({-1, -1, 1}), 1}})
                .conjugate(diag_conj(2, m)));
        if (m <= 6)
            add("Q(sqrt-3)#m=" + std::to_string(m),
                EmbeddedTorus::embed_regular({{poly({3, 0, 1}), 1}})
                    .conjugate(diag_conj(2, m)));
    }
    bool ok = instances.size() >= 30;
    std::string first_bad;
    for (const auto& [label, T] : instances) {
        auto rep = verify_height_equals_disc_sample(T);
        if (!(rep.equal && rep.disc == rep.delta)) {
            ok = false;
            if (first_bad.empty()) first_bad = label;
        }
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs <= 60.0;
    std::ostringstream d;
    d << "Disc(Lambda) = delta exactly on " << instances.size()
      << " instances (n <= 4) in " << secs << " s";
    if (!first_bad.empty()) d << "; first mismatch at " << first_bad;
    report(1, ok, d.str());
}

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> labels;
    std::vector<Rat> deltas, discs;
    bool oracle_ok = true;
    for (long m = 1; m <= 200; ++m) {
        auto T = gaussian_torus(m);
        DiscReport rep = disc_K(T);
        labels.push_back(std::to_string(m));
        deltas.emplace_back(rep.delta);
        discs.emplace_back(rep.disc_value);
        if (m <= 50) {
            // brute-force cross-check of both values
            if (rep.disc_value != oracle_disc(m)) oracle_ok = false;
            if (rep.delta != Int(4) * Int(m) * Int(m)) oracle_ok = false;
        }
    }
    auto f = SampledFunction::of(labels, deltas);
    auto g = SampledFunction::of(labels, discs);
    auto w_fg = fit_domination(f, g); // delta <= c * disc^a
    auto w_gf = fit_domination(g, f);
    bool bands = w_fg.exponent <= make_rat(Int(11), Int(5)) &&
                 w_gf.exponent <= make_rat(Int(11), Int(10)) &&
                 w_fg.constant <= 16 && w_gf.constant <= 16;
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = bands && oracle_ok && secs <= 300.0;
    std::ostringstream d;
    d << "gaussian family m <= 200: delta ~ disc with exponents ("
      << rat_to_string(w_fg.exponent) << ", " << rat_to_string(w_gf.exponent)
      << ") <= (11/5, 11/10), constants (" << rat_to_string(w_fg.constant)
      << ", " << rat_to_string(w_gf.constant) << ") <= 16; oracle cross-check "
      << (oracle_ok ? "clean" : "FAILED") << " for m <= 50; " << secs << " s";
    report(2, ok, d.str());
}

void criterion_3() {
    bool ok = true;
    std::ostringstream bad;
    // suite: gaussian pairs (m <= 50, p | m) plus maximal-order controls
    for (long m = 2; m <= 50; ++m) {
        auto T = gaussian_torus(m);
        auto pair = OrderPair::of(T);
        for (long p : {2l, 3l, 5l, 7l, 11l, 13l, 17l, 19l, 23l, 29l, 31l, 37l,
                       41l, 43l, 47l}) {
            unsigned k = std::max(conductor_exponent(pair, Int(p)), 1u);
            Int ring_size = pow_int(pow_int(Int(p), k), 2);
            if (ring_size > Int(1048576)) continue;
            auto rep = local_unit_index(pair, Int(p));
            // independent enumeration oracle
            long pk = 1;
            for (unsigned i = 0; i < k; ++i) pk *= p;
            GaussOracle o{pk, p, std::min(p_part(m, p), pk)};
            if (rep.units_O != Int(o.units_O()) ||
                rep.units_Lambda != Int(o.units_sub()) ||
                rep.index * rep.units_Lambda != rep.units_O) {
                ok = false;
                bad << " (m=" << m << ",p=" << p << ")";
            }
            if ((rep.index == 1) != (m % p != 0)) {
                ok = false;
                bad << " support(m=" << m << ",p=" << p << ")";
            }
        }
    }
    std::string d = "local indices equal exhaustive enumeration with the "
                    "support property, zero exceptions";
    if (!ok) d += "; exceptions:" + bad.str();
    report(3, ok, d);
}

void criterion_4() {
    bool ok = true;
    Rat min_c(1);
    std::vector<EmbeddedTorus> keep;
    std::vector<std::pair<const EmbeddedTorus*, Int>> family;
    std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (long p : primes) keep.push_back(gaussian_torus(p));
    for (std::size_t i = 0; i < primes.size(); ++i)
        family.emplace_back(&keep[i], Int(primes[i]));
    auto rep = eyext_scan(family);
    if (rep.rows.size() != primes.size()) ok = false;
    for (const auto& row : rep.rows) {
        if (!(2 * row.index >= row.p)) ok = false;
        // closed form: p = 2 -> 2; split (p = 1 mod 4) -> p - 1; inert -> p + 1
        long p = row.p.get_si();
        Int expect = p == 2 ? Int(2) : (p % 4 == 1 ? Int(p - 1) : Int(p + 1));
        if (row.index != expect) ok = false;
    }
    min_c = rep.min_c;
    std::ostringstream d;
    d << "conductor-p scan p in {2..47}: 2*index >= p everywhere, closed "
         "forms confirmed, minimal witnessed c = "
      << rat_to_string(min_c);
    report(4, ok, d.str());
}

void criterion_5() {
    bool ok = true;
    Rat worst(0);
    for (long p : {2l, 3l, 5l, 7l, 11l, 13l, 17l, 19l, 23l, 29l, 31l, 37l, 41l,
                   43l, 47l}) {
        auto T = gaussian_torus(p);
        auto pair = OrderPair::of(T);
        auto loc = local_unit_index(pair, Int(p));
        Int pw = power_index(pair, Int(p), 2);
        Rat ratio = make_rat(loc.index, pw);
        if (ratio > worst) worst = ratio;
        if (!(loc.index <= 8 * pw)) ok = false;
    }
    std::ostringstream d;
    d << "h = 2 power indices: local/power <= 8 across the family (max "
      << rat_to_string(worst) << ")";
    report(5, ok, d.str());
}

void criterion_6() {
    bool ok = c_bound(1) == 1 && c_bound(2) == 32 && c_bound(3) == 118098;
    // bracket every Galois-certified field in the suite
    std::vector<std::vector<int>> polys = {
        {1, 0, 1}, {-1, -1, 1}, {3, 0, 1}, {-2, 0, 1}, {-1, -3, 0, 1},
        {1, 1, 1, 1, 1}, {1, 0, 0, 0, 1}};
    for (const auto& cs : polys) {
        std::vector<Int> c;
        for (int v : cs) c.emplace_back(v);
        IntPoly f{std::vector<Int>(c)};
        auto K = NumberField::create(f);
        auto dL = exact_splitting_disc(K);
        if (!dL) continue; // not certified: bounds stand in, nothing to check
        auto E = EtaleAlgebra::from_factors({{f, 1}});
        auto bounds = splitting_disc_bounds(E);
        if (!bounds.contains(abs(*dL))) ok = false;
    }
    report(6, ok,
           "c_bound reproduces 1, 32, 118098 and the bounds bracket every "
           "certified splitting discriminant");
}

void criterion_7() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto c3 = enumerate_fixed_lattice_classes(3);
    if (c3.size() != 3) ok = false;
    // S3 stable lattice list {0, diagonal, sum-zero, Z^3}
    auto st = stable_subspace_enumeration(PermGroup::symmetric(3));
    auto* list = std::get_if<std::vector<IntegerLattice>>(&st);
    if (!list || list->size() != 4) {
        ok = false;
    } else {
        IntMat diag(1, 3);
        diag.at(0, 0) = diag.at(0, 1) = diag.at(0, 2) = 1;
        IntMat sumzero(2, 3);
        sumzero.at(0, 0) = 1;
        sumzero.at(0, 2) = -1;
        sumzero.at(1, 1) = 1;
        sumzero.at(1, 2) = -1;
        ok = ok && (*list)[0].rank() == 0 && (*list)[1] == hnf(diag) &&
             (*list)[2] == hnf(sumzero) && (*list)[3] == IntegerLattice::full(3);
    }
    // N = 4 counts against an independent 2-generated-closure oracle
    // (every subgroup of S4 is generated by at most two elements)
    {
        auto S4 = PermGroup::symmetric(4);
        std::set<std::vector<Perm>> subgroups;
        for (const Perm& a : S4.elements())
            for (const Perm& b : S4.elements()) {
                auto H = PermGroup::generated(4, {a, b});
                subgroups.insert(H.elements());
            }
        if (subgroups.size() != 30) ok = false; // total subgroups of S4
        auto classes = subgroup_conjugacy_classes(4);
        if (classes.size() != 11) ok = false;
        if (enumerate_fixed_lattice_classes(4).size() != 5) ok = false;
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs <= 30.0;
    std::ostringstream d;
    d << "atlas: N=3 gives 3 classes and the S3 stable list; N=4 gives 30 "
         "subgroups, 11 classes, 5 lattice classes (oracle-checked); "
      << secs << " s";
    report(7, ok, d.str());
}

void criterion_8() {
    bool ok = true;
    SplitMix64 rng(20260808);
    FitOptions small_grid;
    small_grid.exponent_grid = 8;
    unsigned done = 0;
    while (done < 100) {
        std::size_t n = 3 + rng.below(5);
        std::vector<Rat> fv, gv, hv;
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            fv.push_back(Rat(2 + static_cast<long>(rng.below(60))));
            gv.push_back(Rat(1 + static_cast<long>(rng.below(40))));
            hv.push_back(Rat(1 + static_cast<long>(rng.below(50))));
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
        if (out.exponent != w2.exponent + w1.exponent + w1.exponent * w2.exponent)
            ok = false;
        if (!verify_witness(pointwise_product(g, h), f, out)) ok = false;
        // max-product brackets on the same sample
        auto br = max_product_bracket(f, g);
        if (!verify_witness(pointwise_max(f, g), pointwise_product(f, g),
                            br.max_le_product))
            ok = false;
        ++done;
    }
    report(8, ok,
           "dichotomy exponent identity a2 + a1 + a1*a2 exact on 100 "
           "randomized valid pairs; max/product brackets verify");
}

void criterion_9() {
    // in-process double run
    const char* cfg_text = R"({
      "schema": "torusdisc/1",
      "tori": [
        {"label": "gauss", "algebra": [{"poly": [1, 0, 1], "mult": 1}],
         "conjugator": {"family": "diagonal", "range": [1, 60]}}
      ]
    })";
    auto cfg = parse_config(cfg_text);
    RunOptions opts;
    opts.format = "csv";
    opts.seed = 12345;
    auto r1 = cmd_verify_thm51(cfg, opts);
    auto r2 = cmd_verify_thm51(cfg, opts);
    bool ok = r1.exit_code == kExitOk && r1.output == r2.output;
    std::string how = "in-process";
    // through the real binary when its path is provided
    if (const char* cli = std::getenv("TORUSDISC_CLI")) {
        std::string cfg_path = "/tmp/torusdisc_accept9.json";
        {
            std::ofstream out(cfg_path);
            out << cfg_text;
        }
        std::string o1 = "/tmp/torusdisc_accept9_a.csv";
        std::string o2 = "/tmp/torusdisc_accept9_b.csv";
        std::string base = std::string(cli) + " verify-thm51 --config " + cfg_path +
                           " --format csv --seed 12345 --out ";
        int rc1 = std::system((base + o1 + " 2>/dev/null").c_str());
        int rc2 = std::system((base + o2 + " 2>/dev/null").c_str());
        auto slurp = [](const std::string& path) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        std::string f1 = slurp(o1), f2 = slurp(o2);
        ok = ok && rc1 == 0 && rc2 == 0 && !f1.empty() && f1 == f2 && f1 == r1.output;
        how = "in-process and through the CLI binary";
    }
    report(9, ok, "verify-thm51 CSV byte-identical across runs (" + how + ")");
}

void criterion_10() {
    // (Z + 3iZ) at p = 3: multiplicative index 4 exceeds additive index 3
    auto T = gaussian_torus(3);
    auto pair = OrderPair::of(T);
    auto rep = local_unit_index(pair, Int(3));
    GaussOracle oracle{3, 3, 3};
    bool confirmed = rep.units_O == Int(oracle.units_O()) &&
                     rep.units_Lambda == Int(oracle.units_sub());
    Int additive = pair.index();
    bool finding = rep.index == 4 && additive == 3 && rep.index > additive;
    report(10, confirmed && finding,
           "diagnostic on record: [O_p^x : Lambda_p^x] = 4 > 3 = [O : Lambda] "
           "for Z+3iZ at p = 3 (brute-force confirmed); the suite relies on "
           "the two-sided equivalence, not the one-sided chain");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
