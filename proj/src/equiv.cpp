#include "torusdisc/equiv.hpp"

#include "torusdisc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace torusdisc {

SampledFunction SampledFunction::of(std::vector<std::string> labels,
                                    std::vector<Rat> values) {
    if (labels.size() != values.size())
        throw error("sampled function: label/value size mismatch");
    if (values.empty()) throw error("sampled function: empty sample");
    for (const Rat& v : values)
        if (v < 1) throw error("sampled function values must be >= 1");
    return SampledFunction{std::move(labels), std::move(values)};
}

SampledFunction pointwise_product(const SampledFunction& f, const SampledFunction& g) {
    if (f.size() != g.size()) throw error("pointwise_product: size mismatch");
    std::vector<Rat> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = f.values[i] * g.values[i];
    return SampledFunction{f.labels, std::move(v)};
}

SampledFunction pointwise_max(const SampledFunction& f, const SampledFunction& g) {
    if (f.size() != g.size()) throw error("pointwise_max: size mismatch");
    std::vector<Rat> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        v[i] = f.values[i] >= g.values[i] ? f.values[i] : g.values[i];
    return SampledFunction{f.labels, std::move(v)};
}

namespace {

// exponents of a canonical rational a = p/q as unsigned longs
std::pair<unsigned long, unsigned long> exp_parts(const Rat& a) {
    if (a < 0) throw error("negative exponent");
    if (!a.get_num().fits_ulong_p() || !a.get_den().fits_ulong_p())
        throw error("exponent too large for exact verification");
    return {a.get_num().get_ui(), a.get_den().get_ui()};
}

// f <= c * g^(p/q)  <=>  f^q <= c^q g^p (all values positive)
bool dominates_at(const Rat& f, const Rat& g, const Rat& c, unsigned long p,
                  unsigned long q) {
    Rat lhs = pow_rat(f, static_cast<long>(q));
    Rat rhs = pow_rat(c, static_cast<long>(q)) * pow_rat(g, static_cast<long>(p));
    return lhs <= rhs;
}

// overflow-safe natural log of a positive rational (search accelerator only;
// every decision taken from it is confirmed exactly)
double log_rat(const Rat& x) {
    long en, ed;
    double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
    constexpr double ln2 = 0.6931471805599453;
    return std::log(mn) - std::log(md) + ln2 * static_cast<double>(en - ed);
}

} // namespace

bool verify_witness(const SampledFunction& f, const SampledFunction& g,
                    const DominationWitness& w) {
    if (f.size() != g.size()) throw error("verify_witness: size mismatch");
    if (w.constant < 1 || w.exponent < 0) return false;
    auto [p, q] = exp_parts(w.exponent);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!dominates_at(f.values[i], g.values[i], w.constant, p, q))
            return false;
    return true;
}

DominationWitness fit_domination(const SampledFunction& f, const SampledFunction& g,
                                 const FitOptions& opts) {
    if (f.size() != g.size()) throw error("fit_domination: size mismatch");
    const unsigned long Q = opts.exponent_grid;
    const unsigned long Rc = opts.constant_grid;
    // drop (1,1) samples; detect the no-witness situation
    std::vector<std::size_t> keep;
    bool some_g_gt1 = false, some_f_gt1 = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (g.values[i] == 1 && f.values[i] == 1) continue;
        keep.push_back(i);
        some_g_gt1 |= g.values[i] > 1;
        some_f_gt1 |= f.values[i] > 1;
    }
    if (keep.empty()) return DominationWitness{Rat(0), Rat(1)};
    if (!some_g_gt1 && some_f_gt1)
        throw all_ones("every g value is 1 while f exceeds 1");

    // candidate pairs for the maximal slope: sort by g, and for consecutive
    // distinct g-classes take (min f below, max f above); the maximal
    // pairwise slope is attained on such a pair
    struct Pt {
        Rat g, fmin, fmax;
    };
    std::vector<std::pair<Rat, Rat>> pts;
    for (std::size_t i : keep) pts.emplace_back(g.values[i], f.values[i]);
    std::sort(pts.begin(), pts.end());
    std::vector<Pt> classes;
    for (const auto& [gv, fv] : pts) {
        if (!classes.empty() && classes.back().g == gv) {
            classes.back().fmin = std::min(classes.back().fmin, fv);
            classes.back().fmax = std::max(classes.back().fmax, fv);
        } else {
            classes.push_back(Pt{gv, fv, fv});
        }
    }
    // exact condition "k/Q >= slope of the pair"
    auto slope_cond = [&](const Rat& f_lo, const Rat& g_lo, const Rat& f_hi,
                          const Rat& g_hi, unsigned long k) {
        return pow_rat(g_hi / g_lo, static_cast<long>(k)) >=
               pow_rat(f_hi / f_lo, static_cast<long>(Q));
    };
    // least grid multiple k/Q at least the slope, seeded by a double estimate
    // (estimates only steer; each boundary is decided exactly)
    auto grid_ceil_slope = [&](const Rat& f_lo, const Rat& g_lo, const Rat& f_hi,
                               const Rat& g_hi) -> unsigned long {
        Rat fr = f_hi / f_lo;
        if (fr <= 1) return 0;
        double est = log_rat(fr) / log_rat(g_hi / g_lo) * static_cast<double>(Q);
        long k = std::max(0l, static_cast<long>(est) - 2);
        while (!slope_cond(f_lo, g_lo, f_hi, g_hi, k)) ++k;
        while (k > 0 && slope_cond(f_lo, g_lo, f_hi, g_hi, k - 1)) --k;
        return static_cast<unsigned long>(k);
    };
    // candidate pairs; process in descending estimated slope and skip pairs
    // that provably cannot beat the current exact maximum
    struct Cand {
        Rat f_lo, g_lo, f_hi, g_hi;
        double est;
    };
    std::vector<Cand> cands;
    auto add_cand = [&](const Rat& fl, const Rat& gl, const Rat& fh, const Rat& gh) {
        if (fh <= fl) return;
        cands.push_back(Cand{fl, gl, fh, gh,
                             log_rat(fh / fl) / log_rat(gh / gl) *
                                 static_cast<double>(Q)});
    };
    for (std::size_t u = 0; u + 1 < classes.size(); ++u) {
        if (classes[u].g == 1) {
            for (std::size_t v = u + 1; v < classes.size(); ++v)
                add_cand(classes[u].fmin, Rat(1), classes[v].fmax, classes[v].g);
        } else {
            add_cand(classes[u].fmin, classes[u].g, classes[u + 1].fmax,
                     classes[u + 1].g);
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.est > b.est; });
    unsigned long k_hi = 0;
    for (const Cand& cd : cands) {
        if (cd.est + 4.0 < static_cast<double>(k_hi)) break;
        k_hi = std::max(k_hi, grid_ceil_slope(cd.f_lo, cd.g_lo, cd.f_hi, cd.g_hi));
    }
    // minimal grid constant at a given grid exponent: the residual maximum is
    // located with double estimates but compared exactly among the leaders
    auto min_const_at = [&](unsigned long k) -> Rat {
        Rat a = make_rat(Int(static_cast<unsigned long>(k)),
                         Int(static_cast<unsigned long>(Q)));
        auto [p, q] = exp_parts(a);
        double aa = static_cast<double>(k) / static_cast<double>(Q);
        double best_est = -1e300;
        for (std::size_t i : keep)
            best_est = std::max(best_est,
                                log_rat(f.values[i]) - aa * log_rat(g.values[i]));
        Rat M(0);
        bool have = false;
        for (std::size_t i : keep) {
            double e = log_rat(f.values[i]) - aa * log_rat(g.values[i]);
            if (e + 1e-6 < best_est) continue;
            Rat r = pow_rat(f.values[i], static_cast<long>(q)) /
                    pow_rat(g.values[i], static_cast<long>(p));
            if (!have || r > M) {
                M = r;
                have = true;
            }
        }
        if (!have || M <= 1) return Rat(1);
        Rat root;
        if (exact_kth_root(M, q, root)) return root >= 1 ? root : Rat(1);
        // minimal u/Rc with (u/Rc)^q >= M, seeded by the double estimate
        double c_est = std::exp(best_est);
        Int u_seed;
        if (c_est < 1e17) {
            u_seed = Int(static_cast<unsigned long>(
                c_est * static_cast<double>(Rc)));
        } else {
            // fall back to an exact doubling bracket
            Rat hi_est(2);
            while (pow_rat(hi_est, static_cast<long>(q)) < M) hi_est *= 2;
            u_seed = hi_est.get_num() * Int(static_cast<unsigned long>(Rc)) /
                     hi_est.get_den();
        }
        Int u = u_seed - 2;
        if (u < Int(static_cast<unsigned long>(Rc))) u = Int(static_cast<unsigned long>(Rc));
        auto c_ok = [&](const Int& uu) {
            Rat c = make_rat(uu, Int(static_cast<unsigned long>(Rc)));
            return pow_rat(c, static_cast<long>(q)) >= M;
        };
        while (!c_ok(u)) ++u;
        while (u > Int(static_cast<unsigned long>(Rc)) && c_ok(u - 1)) --u;
        return make_rat(u, Int(static_cast<unsigned long>(Rc)));
    };
    Rat c_min = min_const_at(k_hi);
    const double log_c = log_rat(c_min);
    // least grid exponent at which c_min covers every sample: the binding
    // sample bounds give a sharp estimate, then exact adjustment
    auto covered_at = [&](unsigned long k) {
        Rat a = make_rat(Int(static_cast<unsigned long>(k)),
                         Int(static_cast<unsigned long>(Q)));
        auto [p, q] = exp_parts(a);
        double aa = static_cast<double>(k) / static_cast<double>(Q);
        for (std::size_t i : keep) {
            double margin =
                log_c + aa * log_rat(g.values[i]) - log_rat(f.values[i]);
            if (margin > 1e-6) continue; // safely satisfied
            if (!dominates_at(f.values[i], g.values[i], c_min, p, q))
                return false;
        }
        return true;
    };
    double k_est = 0;
    for (std::size_t i : keep) {
        double lg = log_rat(g.values[i]);
        if (lg <= 0) continue;
        k_est = std::max(k_est, (log_rat(f.values[i]) - log_c) / lg *
                                    static_cast<double>(Q));
    }
    long k_star = std::min<long>(k_hi, std::max(0l, static_cast<long>(k_est) - 2));
    while (static_cast<unsigned long>(k_star) < k_hi &&
           !covered_at(static_cast<unsigned long>(k_star)))
        ++k_star;
    while (k_star > 0 && covered_at(static_cast<unsigned long>(k_star - 1)))
        --k_star;
    DominationWitness w{make_rat(Int(static_cast<unsigned long>(k_star)),
                                 Int(static_cast<unsigned long>(Q))),
                        c_min};
    // the estimates can only misplace the search, never the answer: confirm
    // exactly, nudging upward if a boundary was misjudged
    for (int guard = 0; guard < 64 && !verify_witness(f, g, w); ++guard) {
        if (static_cast<unsigned long>(k_star) < k_hi) {
            ++k_star;
        } else {
            w.constant *= 2;
        }
        w.exponent = make_rat(Int(static_cast<unsigned long>(k_star)),
                              Int(static_cast<unsigned long>(Q)));
    }
    if (!verify_witness(f, g, w)) throw error("fitted witness failed verification");
    return w;
}

EquivReport check_equivalence(const SampledFunction& f, const SampledFunction& g,
                              const Rat& exponent_cap, const FitOptions& opts) {
    if (exponent_cap.get_den() != 1)
        throw error("check_equivalence: exponent cap must be an integer");
    EquivReport rep;
    rep.note = "exponents minimal over the sample at grid 1/" +
               std::to_string(opts.exponent_grid) +
               "; finite samples witness, never prove";
    auto try_fit = [&](const SampledFunction& a, const SampledFunction& b)
        -> std::optional<DominationWitness> {
        DominationWitness w = fit_domination(a, b, opts);
        if (w.exponent > exponent_cap) return std::nullopt;
        return w;
    };
    auto violation = [&](const SampledFunction& a, const SampledFunction& b) {
        // index maximizing the residual a_i / b_i^cap
        unsigned long cap = exponent_cap.get_num().get_ui();
        std::size_t best = 0;
        Rat best_ratio(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            Rat r = a.values[i] / pow_rat(b.values[i], static_cast<long>(cap));
            if (r > best_ratio) {
                best_ratio = r;
                best = i;
            }
        }
        rep.violation_index = best;
        rep.violation_ratio = best_ratio;
    };
    rep.fg = try_fit(f, g);
    if (!rep.fg) {
        violation(f, g);
        rep.equivalent = false;
        return rep;
    }
    rep.gf = try_fit(g, f);
    if (!rep.gf) {
        violation(g, f);
        rep.equivalent = false;
        return rep;
    }
    rep.equivalent = true;
    return rep;
}

namespace {

// c^(p/q) rounded up to an exactly-representable rational
Rat pow_rat_ceil(const Rat& c, const Rat& e, unsigned long grid) {
    auto [p, q] = exp_parts(e);
    Rat target = pow_rat(c, static_cast<long>(p)); // want x with x^q >= c^p
    if (q == 1) return target;
    Rat root;
    if (exact_kth_root(target, q, root)) return root;
    Rat hi(1);
    while (pow_rat(hi, static_cast<long>(q)) < target) hi *= 2;
    Int lo_u(static_cast<unsigned long>(grid));
    Int hi_u = hi.get_num() * Int(static_cast<unsigned long>(grid)) / hi.get_den() + 1;
    while (lo_u < hi_u) {
        Int mid = lo_u + (hi_u - lo_u) / 2;
        Rat x = make_rat(mid, Int(static_cast<unsigned long>(grid)));
        if (pow_rat(x, static_cast<long>(q)) >= target)
            hi_u = mid;
        else
            lo_u = mid + 1;
    }
    return make_rat(lo_u, Int(static_cast<unsigned long>(grid)));
}

} // namespace

DominationWitness dichotomy_combine(const DominationWitness& w1,
                                    const DominationWitness& w2,
                                    const SampledFunction& f,
                                    const SampledFunction& g,
                                    const SampledFunction& h,
                                    const FitOptions& opts) {
    if (!verify_witness(h, pointwise_product(f, g), w1))
        throw invalid_witness("dichotomy_combine: w1 fails on (h, f*g)");
    if (!verify_witness(g, f, w2))
        throw invalid_witness("dichotomy_combine: w2 fails on (g, f)");
    const Rat& a1 = w1.exponent;
    const Rat& a2 = w2.exponent;
    DominationWitness out;
    out.exponent = a2 + a1 + a1 * a2;
    out.constant = w1.constant *
                   pow_rat_ceil(w2.constant, Rat(1) + a1, opts.constant_grid);
    if (!verify_witness(pointwise_product(g, h), f, out))
        throw error("combined witness failed verification");
    return out;
}

DominationWitness compose_transitive(const DominationWitness& w_fg,
                                     const DominationWitness& w_gh,
                                     const SampledFunction& f,
                                     const SampledFunction& g,
                                     const SampledFunction& h,
                                     const FitOptions& opts) {
    if (!verify_witness(f, g, w_fg))
        throw invalid_witness("compose_transitive: w_fg fails");
    if (!verify_witness(g, h, w_gh))
        throw invalid_witness("compose_transitive: w_gh fails");
    DominationWitness out;
    out.exponent = w_fg.exponent * w_gh.exponent;
    out.constant =
        w_fg.constant *
        pow_rat_ceil(w_gh.constant, w_fg.exponent, opts.constant_grid);
    if (!verify_witness(f, h, out))
        throw error("transitive witness failed verification");
    return out;
}

BracketPair max_product_bracket(const SampledFunction& f, const SampledFunction& g) {
    BracketPair out{{Rat(1), Rat(1)}, {Rat(2), Rat(1)}};
    SampledFunction mx = pointwise_max(f, g);
    SampledFunction pr = pointwise_product(f, g);
    if (!verify_witness(mx, pr, out.max_le_product))
        throw error("max <= product bracket failed");
    if (!verify_witness(pr, mx, out.product_le_max_sq))
        throw error("product <= max^2 bracket failed");
    return out;
}

} // namespace torusdisc
