#include "torusdisc/fppoly.hpp"

#include <cassert>
#include <stdexcept>

namespace torusdisc {
namespace fp {

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("invm(0)");
    return powm(a, p - 2, p); // p prime
}

Poly reduce(const IntPoly& f, u64 p) {
    Poly out(f.coeffs().size());
    Int P(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), P.get_mpz_t());
        out[i] = r.get_ui();
    }
    trim(out);
    return out;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 v = 0;
        if (i < a.size()) v = a[i];
        if (i < b.size()) v = addm(v, b[i], p);
        r[i] = v;
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 v = i < a.size() ? a[i] : 0;
        r[i] = subm(v, i < b.size() ? b[i] : 0, p);
    }
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulm(a[i], c, p);
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u64 p) {
    if (b.empty()) throw std::domain_error("fp divmod by zero");
    Poly rem = a;
    long db = degree(b);
    long da = degree(a);
    if (da < db) return {{}, rem};
    Poly quo(da - db + 1, 0);
    u64 inv_lc = invm(b.back(), p);
    for (long i = da; i >= db; --i) {
        if ((long)rem.size() <= i || rem[i] == 0) continue;
        u64 q = mulm(rem[i], inv_lc, p);
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = subm(rem[i - db + j], mulm(q, b[j], p), p);
    }
    trim(quo);
    trim(rem);
    return {quo, rem};
}

Poly monic(const Poly& a, u64 p) {
    if (a.empty()) return a;
    return scale(a, invm(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
    while (!b.empty()) {
        auto [q, r] = divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& a, u64 p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p, p);
    trim(r);
    return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    return divmod(mul(a, b, p), f, p).second;
}

Poly xpow_mod(u64 e, const Poly& f, u64 p) {
    Poly base = divmod(Poly{0, 1}, f, p).second;
    Poly r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly powmod(const Poly& base0, const Int& e0, const Poly& f, u64 p) {
    Poly base = divmod(base0, f, p).second;
    Poly r{1};
    Int e = e0;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

bool is_squarefree(const Poly& f, u64 p) {
    if (f.empty()) return false;
    Poly d = derivative(f, p);
    if (d.empty()) return degree(f) == 0;
    return degree(gcd(f, d, p)) == 0;
}

Mat kernel(Mat m, u64 p) {
    const std::size_t R = m.rows, C = m.cols;
    std::vector<long> pivot_of_col(C, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && m.at(piv, c) == 0) ++piv;
        if (piv == R) continue;
        for (std::size_t j = 0; j < C; ++j)
            std::swap(m.e[piv * C + j], m.e[r * C + j]);
        u64 inv = invm(m.at(r, c), p);
        for (std::size_t j = 0; j < C; ++j) m.at(r, j) = mulm(m.at(r, j), inv, p);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            u64 f = m.at(i, c);
            for (std::size_t j = 0; j < C; ++j)
                m.at(i, j) = subm(m.at(i, j), mulm(f, m.at(r, j), p), p);
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < C; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    Mat k(free_cols.size(), C);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        k.at(i, fc) = 1;
        for (std::size_t c = 0; c < C; ++c) {
            long pr = pivot_of_col[c];
            if (pr >= 0) k.at(i, c) = subm(0, m.at(pr, fc), p);
        }
    }
    return k;
}

u64 det(Mat m, u64 p) {
    assert(m.rows == m.cols);
    const std::size_t n = m.rows;
    u64 d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.e[piv * n + j], m.e[c * n + j]);
            d = subm(0, d, p);
        }
        d = mulm(d, m.at(c, c), p);
        u64 inv = invm(m.at(c, c), p);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            u64 f = mulm(m.at(i, c), inv, p);
            for (std::size_t j = c; j < n; ++j)
                m.at(i, j) = subm(m.at(i, j), mulm(f, m.at(c, j), p), p);
        }
    }
    return d;
}

std::vector<Poly> berlekamp(const Poly& f0, u64 p) {
    Poly f = monic(f0, p);
    const long n = degree(f);
    if (n <= 1) return {f};
    // Q: row i = x^(i*p) mod f
    Mat Q(n, n);
    Poly xp = xpow_mod(p, f, p);
    Poly cur{1};
    for (long i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) Q.at(i, j) = cur[j];
        cur = mulmod(cur, xp, f, p);
    }
    // Berlekamp subalgebra: v with v Q = v  <=>  (Q^T - I) v^T = 0
    Mat A(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            u64 v = Q.at(j, i);
            if (i == j) v = subm(v, 1, p);
            A.at(i, j) = v;
        }
    Mat K = kernel(A, p);
    const std::size_t r = K.rows; // number of irreducible factors
    std::vector<Poly> factors{f};
    if (r == 1) return factors;
    for (std::size_t vi = 0; vi < K.rows && factors.size() < r; ++vi) {
        Poly v(K.cols);
        for (std::size_t j = 0; j < K.cols; ++j) v[j] = K.at(vi, j);
        trim(v);
        if (degree(v) < 1) continue;
        std::vector<Poly> next;
        for (const Poly& g : factors) {
            if (degree(g) <= 1) {
                next.push_back(g);
                continue;
            }
            Poly rem = g;
            std::vector<Poly> pieces;
            for (u64 s = 0; s < p && degree(rem) > 0; ++s) {
                Poly vs = v;
                if (vs.empty()) {
                    vs = Poly{subm(0, s, p)};
                } else {
                    vs[0] = subm(vs[0], s, p);
                }
                trim(vs);
                Poly h = is_zero(vs) ? rem : gcd(rem, vs, p);
                if (degree(h) > 0 && degree(h) < degree(rem)) {
                    pieces.push_back(monic(h, p));
                    rem = divmod(rem, h, p).first;
                }
            }
            if (degree(rem) > 0) pieces.push_back(monic(rem, p));
            for (auto& h : pieces) next.push_back(std::move(h));
        }
        factors = std::move(next);
    }
    return factors;
}

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f0, u64 p) {
    Poly f = monic(f0, p);
    std::vector<std::pair<Poly, unsigned>> out;
    auto add_factor = [&out](const Poly& q, unsigned m) {
        for (auto& [q2, m2] : out)
            if (q2 == q) {
                m2 += m;
                return;
            }
        out.emplace_back(q, m);
    };
    while (degree(f) > 0) {
        Poly d = derivative(f, p);
        if (is_zero(d)) {
            // f = g(x^p) = g(x)^p over F_p
            Poly g((f.size() - 1) / p + 1, 0);
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = f[i * p];
            for (auto& [q, m] : factor(g, p)) add_factor(q, m * p);
            return out;
        }
        Poly sf = divmod(f, gcd(f, d, p), p).first; // squarefree part
        for (const Poly& q : berlekamp(sf, p)) {
            unsigned mult = 0;
            for (;;) {
                auto [quo, rem] = divmod(f, q, p);
                if (!is_zero(rem)) break;
                f = quo;
                ++mult;
            }
            if (mult) add_factor(q, mult);
        }
    }
    return out;
}

} // namespace fp
} // namespace torusdisc
