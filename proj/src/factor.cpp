#include "torusdisc/factor.hpp"

#include "torusdisc/errors.hpp"
#include "torusdisc/fppoly.hpp"

#include <algorithm>
#include <cassert>

namespace torusdisc {

namespace {

constexpr long kDegreeCap = 12;

// --- arithmetic mod m = p^k with balanced lift at the end ---

using ZmPoly = std::vector<Int>;

void zm_trim(ZmPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZmPoly zm_reduce(const IntPoly& f, const Int& m) {
    ZmPoly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        mpz_fdiv_r(out[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
    zm_trim(out);
    return out;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    for (Int& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    zm_trim(r);
    return r;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        mpz_fdiv_r(r[i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
    zm_trim(r);
    return r;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        mpz_fdiv_r(r[i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
    zm_trim(r);
    return r;
}

// division by a monic divisor, coefficients mod m
std::pair<ZmPoly, ZmPoly> zm_divmod_monic(const ZmPoly& a, const ZmPoly& d,
                                           const Int& m) {
    assert(!d.empty() && d.back() == 1);
    ZmPoly rem = a;
    long dd = static_cast<long>(d.size()) - 1;
    long da = static_cast<long>(rem.size()) - 1;
    if (da < dd) return {{}, rem};
    ZmPoly quo(da - dd + 1);
    for (long i = da; i >= dd; --i) {
        if ((long)rem.size() <= i) continue;
        Int q = rem[i];
        if (q == 0) continue;
        quo[i - dd] = q;
        for (long j = 0; j <= dd; ++j) {
            Int v = rem[i - dd + j] - q * d[j];
            mpz_fdiv_r(rem[i - dd + j].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        }
    }
    zm_trim(quo);
    zm_trim(rem);
    return {quo, rem};
}

ZmPoly from_fp(const fp::Poly& f) {
    ZmPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = Int(static_cast<unsigned long>(f[i]));
    return out;
}

IntPoly balanced_lift(const ZmPoly& f, const Int& m) {
    std::vector<Int> c(f.size());
    Int half = m / 2;
    for (std::size_t i = 0; i < f.size(); ++i)
        c[i] = f[i] > half ? f[i] - m : f[i];
    return IntPoly(std::move(c));
}

// One quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m), h monic
// -> the same relations mod m^2 with h* monic.
struct HenselPair {
    ZmPoly g, h, s, t;
};

HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    ZmPoly g = in.g, h = in.h, s = in.s, t = in.t;
    ZmPoly e = zm_sub(f, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZmPoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZmPoly h1 = zm_add(h, r, m2);
    ZmPoly one{Int(1)};
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), one, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h1, m2);
    ZmPoly s1 = zm_sub(s, d, m2);
    ZmPoly t1 = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c, g1, m2), m2);
    return HenselPair{g1, h1, s1, t1};
}

// Reduce coefficients of a ZmPoly into [0, m).
ZmPoly zm_mod(const ZmPoly& f, const Int& m) {
    ZmPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    zm_trim(out);
    return out;
}

// Lift the factorization f = prod(parts) mod p up to the modulus T = p^(2^l);
// f (given mod T) and all parts monic. Appends the lifted parts, in order.
void hensel_tree(const ZmPoly& f, const std::vector<fp::Poly>& parts,
                 fp::u64 p, const Int& T, std::vector<ZmPoly>& out) {
    if (parts.size() == 1) {
        out.push_back(f); // monic lift of a single factor is f itself
        return;
    }
    std::size_t half = parts.size() / 2;
    fp::Poly g0{1}, h0{1};
    for (std::size_t i = 0; i < half; ++i) g0 = fp::mul(g0, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i)
        h0 = fp::mul(h0, parts[i], p);
    // Bezout s g0 + t h0 = 1 mod p (g0, h0 coprime: f squarefree mod p)
    fp::Poly ss, tt;
    {
        fp::Poly r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
        while (!fp::is_zero(r1)) {
            auto [q, r] = fp::divmod(r0, r1, p);
            fp::Poly s2 = fp::sub(s0, fp::mul(q, s1, p), p);
            fp::Poly t2 = fp::sub(t0, fp::mul(q, t1, p), p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        assert(fp::degree(r0) == 0);
        fp::u64 inv = fp::invm(r0[0], p);
        ss = fp::scale(s0, inv, p);
        tt = fp::scale(t0, inv, p);
    }
    HenselPair pair{from_fp(g0), from_fp(h0), from_fp(ss), from_fp(tt)};
    Int m(static_cast<unsigned long>(p));
    while (m < T) {
        pair = hensel_step(zm_mod(f, m * m), pair, m);
        m = m * m;
    }
    assert(m == T);
    std::vector<fp::Poly> left(parts.begin(), parts.begin() + half);
    std::vector<fp::Poly> right(parts.begin() + half, parts.end());
    hensel_tree(pair.g, left, p, T, out);
    hensel_tree(pair.h, right, p, T, out);
}

// Coefficient bound for monic factors of monic F (Mignotte-style, loose).
Int factor_coeff_bound(const IntPoly& F) {
    Int norm2_sq(0);
    for (const Int& c : F.coeffs()) norm2_sq += c * c;
    Int norm = kth_root_floor(norm2_sq, 2) + 1;
    return (Int(1) << (F.degree() + 1)) * norm;
}

// Factor a primitive squarefree polynomial with positive lc.
std::vector<IntPoly> factor_squarefree(const IntPoly& s) {
    const long n = s.degree();
    if (n == 1) return {s};
    // monic transform F(y) = lc^(n-1) s(y/lc)
    const Int L = s.lc();
    IntPoly F;
    {
        std::vector<Int> c(n + 1);
        for (long i = 0; i <= n; ++i) c[i] = s.coeff(i) * pow_int(L, n - 1 - i);
        F = IntPoly(std::move(c));
    }
    assert(F.is_monic());
    // choose p with F squarefree mod p
    fp::u64 p = 0;
    {
        static const unsigned primes[] = {3,   5,   7,   11,  13,  17,  19,  23,
                                          29,  31,  37,  41,  43,  47,  53,  59,
                                          61,  67,  71,  73,  79,  83,  89,  97,
                                          101, 103, 107, 109, 113, 127, 131, 137,
                                          139, 149, 151, 157, 163, 167, 173, 179,
                                          181, 191, 193, 197, 199, 211, 223, 227,
                                          229, 233, 239, 241, 251, 257, 263, 269};
        for (unsigned q : primes) {
            fp::Poly fq = fp::reduce(F, q);
            if (fp::degree(fq) == n && fp::is_squarefree(fq, q)) {
                p = q;
                break;
            }
        }
        if (p == 0) {
            // fall back to a scan of larger primes
            Int q(269);
            for (;;) {
                mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
                fp::u64 qq = q.get_ui();
                fp::Poly fq = fp::reduce(F, qq);
                if (fp::degree(fq) == n && fp::is_squarefree(fq, qq)) {
                    p = qq;
                    break;
                }
            }
        }
    }
    std::vector<fp::Poly> modular = fp::berlekamp(fp::reduce(F, p), p);
    std::sort(modular.begin(), modular.end(),
              [](const fp::Poly& a, const fp::Poly& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::vector<IntPoly> monic_factors;
    if (modular.size() == 1) {
        monic_factors.push_back(F);
    } else {
        // lift to modulus T = p^(2^l) large enough to separate balanced
        // representatives of true factors
        Int need = factor_coeff_bound(F) * 2 + 1;
        Int modulus(static_cast<unsigned long>(p));
        while (modulus < need) modulus = modulus * modulus;
        std::vector<ZmPoly> lifted;
        hensel_tree(zm_reduce(F, modulus), modular, p, modulus, lifted);
        // subset recombination
        IntPoly rem = F;
        std::vector<std::size_t> alive(lifted.size());
        for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
        std::size_t take = 1;
        while (2 * take <= alive.size()) {
            bool found = false;
            std::vector<std::size_t> pick(take);
            for (std::size_t i = 0; i < take; ++i) pick[i] = i;
            for (;;) {
                ZmPoly prod{Int(1)};
                for (std::size_t i : pick) prod = zm_mul(prod, lifted[alive[i]], modulus);
                IntPoly cand = balanced_lift(prod, modulus);
                auto [quo, r] = rem.divmod_monic(cand);
                if (r.is_zero()) {
                    monic_factors.push_back(cand);
                    rem = quo;
                    std::vector<std::size_t> next_alive;
                    for (std::size_t i = 0; i < alive.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end())
                            next_alive.push_back(alive[i]);
                    alive = std::move(next_alive);
                    found = true;
                    break;
                }
                // next combination
                long pos = static_cast<long>(take) - 1;
                while (pos >= 0 && pick[pos] == alive.size() - take + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (std::size_t j = pos + 1; j < take; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
            if (!found) ++take;
        }
        if (rem.degree() > 0) monic_factors.push_back(rem);
    }
    // map back through y = lc * x
    std::vector<IntPoly> out;
    for (const IntPoly& G : monic_factors) {
        std::vector<Int> c(G.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = G.coeff(i) * pow_int(L, i);
        out.push_back(IntPoly(std::move(c)).primitive_part());
    }
    return out;
}

} // namespace

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(
    const IntPoly& f) {
    // Yun's algorithm, char 0, primitive positive-lc input
    std::vector<std::pair<IntPoly, unsigned>> parts;
    IntPoly u = poly_gcd(f, f.derivative());
    IntPoly v = f.divide_exact(u);
    IntPoly w = f.derivative().divide_exact(u);
    unsigned i = 1;
    while (v.degree() > 0) {
        IntPoly z = w - v.derivative();
        IntPoly h = poly_gcd(v, z);
        if (h.degree() > 0) parts.emplace_back(h, i);
        v = v.divide_exact(h);
        w = z.divide_exact(h);
        ++i;
    }
    return parts;
}

std::vector<std::pair<IntPoly, unsigned>> factor_over_Q(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw error("factor_over_Q: degree must be >= 1");
    if (f.degree() > kDegreeCap)
        throw degree_too_large("factor_over_Q: degree cap is 12");
    IntPoly g = f.primitive_part(); // positive lc
    std::vector<std::pair<IntPoly, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(g)) {
        for (const IntPoly& irr : factor_squarefree(part)) {
            bool merged = false;
            for (auto& [q, m] : out)
                if (q == irr) {
                    m += mult;
                    merged = true;
                }
            if (!merged) out.emplace_back(irr, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool is_irreducible(const IntPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_Q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace torusdisc
