#include "torusdisc/finitering.hpp"

#include "torusdisc/errors.hpp"
#include "torusdisc/fppoly.hpp"

#include <cassert>
#include <optional>

namespace torusdisc {

namespace {

using Vec = std::vector<fp::u64>;

// F_p row space with membership solving.
struct FpSpan {
    fp::Mat basis; // rref, r x n
    std::vector<std::size_t> pivots;
    fp::u64 p = 0;

    static FpSpan of(const fp::Mat& rows, fp::u64 p) {
        fp::Mat m = rows;
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
            std::size_t k = r;
            while (k < m.rows && m.at(k, c) == 0) ++k;
            if (k == m.rows) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.e[k * m.cols + j], m.e[r * m.cols + j]);
            fp::u64 inv = fp::invm(m.at(r, c), p);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(r, j) = fp::mulm(m.at(r, j), inv, p);
            for (std::size_t i = 0; i < m.rows; ++i) {
                if (i == r || m.at(i, c) == 0) continue;
                fp::u64 f = m.at(i, c);
                for (std::size_t j = 0; j < m.cols; ++j)
                    m.at(i, j) = fp::subm(m.at(i, j), fp::mulm(f, m.at(r, j), p), p);
            }
            piv.push_back(c);
            ++r;
        }
        fp::Mat out(r, m.cols);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
        return FpSpan{out, piv, p};
    }

    std::size_t dim() const { return basis.rows; }

    std::optional<Vec> maybe_coords(const Vec& v) const {
        Vec c(basis.rows, 0), w = v;
        for (std::size_t i = 0; i < basis.rows; ++i) {
            fp::u64 f = w[pivots[i]];
            c[i] = f;
            if (f)
                for (std::size_t j = 0; j < basis.cols; ++j)
                    w[j] = fp::subm(w[j], fp::mulm(f, basis.at(i, j), p), p);
        }
        for (fp::u64 x : w)
            if (x != 0) return std::nullopt;
        return c;
    }

    Vec coords(const Vec& v) const {
        auto c = maybe_coords(v);
        if (!c) throw error("vector outside F_p span");
        return *c;
    }
};

// Commutative F_p-algebra with an explicit basis embedded in F_p^N and
// multiplication inherited from ambient structure constants.
struct FpAlgebra {
    fp::u64 p = 0;
    unsigned N = 0;
    const std::vector<Int>* amb_mult = nullptr; // N^3 structure constants
    std::vector<Vec> basis_amb;                 // t rows in F_p^N
    FpSpan span;                                // span of basis_amb
    Vec one;                                    // coords (length t)

    std::size_t dim() const { return basis_amb.size(); }

    Vec to_amb(const Vec& c) const {
        Vec amb(N, 0);
        for (std::size_t i = 0; i < basis_amb.size(); ++i)
            if (c[i])
                for (unsigned j = 0; j < N; ++j)
                    amb[j] = fp::addm(amb[j], fp::mulm(c[i], basis_amb[i][j], p), p);
        return amb;
    }

    Vec mul_amb_raw(const Vec& x, const Vec& y) const {
        Vec z(N, 0);
        for (unsigned i = 0; i < N; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < N; ++j) {
                if (y[j] == 0) continue;
                fp::u64 xy = fp::mulm(x[i], y[j], p);
                for (unsigned k = 0; k < N; ++k) {
                    Int r;
                    mpz_fdiv_r_ui(r.get_mpz_t(),
                                  (*amb_mult)[(i * N + j) * N + k].get_mpz_t(), p);
                    if (r != 0)
                        z[k] = fp::addm(z[k], fp::mulm(xy, r.get_ui(), p), p);
                }
            }
        }
        return z;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        return span_coords(mul_amb_raw(to_amb(a), to_amb(b)));
    }

    Vec span_coords(const Vec& amb) const {
        // coords w.r.t. basis_amb: solve through the rref span then convert;
        // basis_amb rows are independent, so solve directly by elimination
        // against the stacked basis.
        // Build once would be nicer; dims are tiny.
        const std::size_t t = basis_amb.size();
        fp::Mat aug(N, t + 1);
        for (unsigned r = 0; r < N; ++r) {
            for (std::size_t c = 0; c < t; ++c) aug.at(r, c) = basis_amb[c][r];
            aug.at(r, t) = amb[r];
        }
        std::size_t rr = 0;
        for (std::size_t c = 0; c < t; ++c) {
            std::size_t piv = rr;
            while (piv < N && aug.at(piv, c) == 0) ++piv;
            assert(piv < N);
            for (std::size_t j = 0; j <= t; ++j)
                std::swap(aug.e[piv * (t + 1) + j], aug.e[rr * (t + 1) + j]);
            fp::u64 inv = fp::invm(aug.at(rr, c), p);
            for (std::size_t j = 0; j <= t; ++j)
                aug.at(rr, j) = fp::mulm(aug.at(rr, j), inv, p);
            for (std::size_t i = 0; i < N; ++i) {
                if (i == rr || aug.at(i, c) == 0) continue;
                fp::u64 f = aug.at(i, c);
                for (std::size_t j = 0; j <= t; ++j)
                    aug.at(i, j) = fp::subm(aug.at(i, j), fp::mulm(f, aug.at(rr, j), p), p);
            }
            ++rr;
        }
        Vec z(t);
        for (std::size_t c = 0; c < t; ++c) z[c] = aug.at(c, t);
        return z;
    }

    Vec pow(Vec base, Int e) const {
        Vec acc = one;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
};

} // namespace

FiniteRing::FiniteRing(const EtaleAlgebra& E, const IntegerLattice& lambda_in_oe,
                       const Int& p, unsigned k)
    : E_(&E), n_(E.dim()), k_(k), p_(p) {
    if (k < 1) throw error("FiniteRing: exponent must be >= 1");
    if (lambda_in_oe.rank() != n_ || lambda_in_oe.ambient_dim() != n_)
        throw error("FiniteRing: order lattice must be full rank N x N");
    q_ = pow_int(p, k);
    size_ = pow_int(q_, n_);
    IntMat gens(2 * n_, n_);
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j)
            gens.at(i, j) = lambda_in_oe.basis().at(i, j);
        gens.at(n_ + i, i) = q_;
    }
    sub_basis_ = hnf(gens).basis();
    sub_size_ = 1;
    for (unsigned i = 0; i < n_; ++i) sub_size_ *= q_ / sub_basis_.at(i, i);
    mult_.resize(static_cast<std::size_t>(n_) * n_ * n_);
    const auto& C = E.structure();
    for (std::size_t i = 0; i < mult_.size(); ++i)
        mpz_fdiv_r(mult_[i].get_mpz_t(), C[i].get_mpz_t(), q_.get_mpz_t());
}

FiniteRing::Elem FiniteRing::one() const {
    auto o = E_->one();
    Elem x(n_);
    for (unsigned i = 0; i < n_; ++i) {
        assert(o[i].get_den() == 1);
        mpz_fdiv_r(x[i].get_mpz_t(), o[i].get_num().get_mpz_t(), q_.get_mpz_t());
    }
    return x;
}

FiniteRing::Elem FiniteRing::mul(const Elem& x, const Elem& y) const {
    Elem z(n_, Int(0));
    for (unsigned i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            Int xy = x[i] * y[j];
            for (unsigned kk = 0; kk < n_; ++kk) {
                const Int& c = mult_[(i * n_ + j) * n_ + kk];
                if (c != 0) z[kk] += xy * c;
            }
        }
    }
    for (unsigned i = 0; i < n_; ++i)
        mpz_fdiv_r(z[i].get_mpz_t(), z[i].get_mpz_t(), q_.get_mpz_t());
    return z;
}

FiniteRing::Elem FiniteRing::pow(const Elem& x, const Int& e) const {
    Elem acc = one(), base = x;
    Int ee = e;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) acc = mul(acc, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return acc;
}

bool FiniteRing::is_unit(const Elem& x) const {
    if (!p_.fits_ulong_p()) throw modulus_too_large("prime too large");
    fp::u64 pp = p_.get_ui();
    fp::Mat M(n_, n_);
    for (unsigned j = 0; j < n_; ++j) {
        for (unsigned kk = 0; kk < n_; ++kk) {
            Int acc(0);
            for (unsigned i = 0; i < n_; ++i) {
                const Int& c = mult_[(i * n_ + j) * n_ + kk];
                if (c != 0 && x[i] != 0) acc += x[i] * c;
            }
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), pp);
            M.at(kk, j) = r.get_ui();
        }
    }
    return fp::det(M, pp) != 0;
}

bool FiniteRing::in_subring(const Elem& x) const {
    std::vector<Int> w(x.begin(), x.end());
    for (unsigned i = 0; i < n_; ++i) {
        Int qq, r;
        mpz_fdiv_qr(qq.get_mpz_t(), r.get_mpz_t(), w[i].get_mpz_t(),
                    sub_basis_.at(i, i).get_mpz_t());
        if (r != 0) return false;
        if (qq != 0)
            for (unsigned j = i; j < n_; ++j) w[j] -= qq * sub_basis_.at(i, j);
        for (unsigned j = i + 1; j < n_; ++j)
            mpz_fdiv_r(w[j].get_mpz_t(), w[j].get_mpz_t(), q_.get_mpz_t());
    }
    return true;
}

void FiniteRing::require_budget(std::uint64_t budget) const {
    if (size_ > Int(static_cast<unsigned long>(budget)))
        throw modulus_too_large("ring enumeration exceeds the budget");
}

Int FiniteRing::count_units(std::uint64_t budget) const {
    Int count(0);
    for_each_element(budget, [&](const Elem& x) {
        if (is_unit(x)) ++count;
    });
    return count;
}

Int FiniteRing::count_subring_units(std::uint64_t budget) const {
    Int count(0);
    for_each_subring_element(budget, [&](const Elem& x) {
        if (is_unit(x)) ++count;
    });
    return count;
}

std::vector<FiniteRing::Elem> FiniteRing::units(std::uint64_t budget) const {
    std::vector<Elem> out;
    for_each_element(budget, [&](const Elem& x) {
        if (is_unit(x)) out.push_back(x);
    });
    return out;
}

std::vector<unsigned> FiniteRing::residue_degrees(const IntMat& rows) const {
    if (!p_.fits_ulong_p()) throw modulus_too_large("prime too large");
    const fp::u64 p = p_.get_ui();
    const unsigned N = n_;
    // B = F_p-span of the rows inside O/pO: a subalgebra containing 1
    fp::Mat raw(rows.rows(), N);
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (unsigned j = 0; j < N; ++j) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), rows.at(i, j).get_mpz_t(), p);
            raw.at(i, j) = r.get_ui();
        }
    FpSpan Bspan = FpSpan::of(raw, p);
    FpAlgebra B;
    B.p = p;
    B.N = N;
    B.amb_mult = &E_->structure();
    for (std::size_t i = 0; i < Bspan.dim(); ++i) {
        Vec v(N);
        for (unsigned j = 0; j < N; ++j) v[j] = Bspan.basis.at(i, j);
        B.basis_amb.push_back(v);
    }
    B.span = Bspan;
    {
        auto o = E_->one();
        Vec amb(N, 0);
        for (unsigned i = 0; i < N; ++i) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), o[i].get_num().get_mpz_t(), p);
            amb[i] = r.get_ui();
        }
        B.one = B.span_coords(amb);
    }
    const std::size_t s = B.dim();
    // radical = kernel of x -> x^(p^e), p^e >= s
    Int pe = p_;
    while (pe < (long)s) pe *= p_;
    fp::Mat frob(s, s);
    for (std::size_t i = 0; i < s; ++i) {
        Vec ei(s, 0);
        ei[i] = 1;
        Vec img = B.pow(ei, pe);
        for (std::size_t kk = 0; kk < s; ++kk) frob.at(kk, i) = img[kk];
    }
    fp::Mat rad = fp::kernel(frob, p);
    // C = B / radical, with basis lifted from B basis vectors independent of
    // the radical (as an algebra C is the span of those vectors *plus* the
    // radical; products are taken mod radical via the combined solve)
    std::vector<std::size_t> comp_idx;
    {
        fp::Mat acc = rad;
        FpSpan cur = FpSpan::of(acc, p);
        for (std::size_t i = 0; i < s; ++i) {
            Vec cand(s, 0);
            cand[i] = 1;
            if (cur.maybe_coords(cand)) continue;
            fp::Mat bigger(cur.basis.rows + 1, s);
            for (std::size_t r2 = 0; r2 < cur.basis.rows; ++r2)
                for (std::size_t j = 0; j < s; ++j)
                    bigger.at(r2, j) = cur.basis.at(r2, j);
            for (std::size_t j = 0; j < s; ++j) bigger.at(cur.basis.rows, j) = cand[j];
            cur = FpSpan::of(bigger, p);
            comp_idx.push_back(i);
        }
    }
    const std::size_t t = comp_idx.size();
    assert(t + rad.rows == s);
    // C as an algebra: elements are B-coord vectors reduced mod radical;
    // represent by t coordinates over the complement, with a combined solver
    // [rad rows; complement rows] and projection onto the complement part.
    fp::Mat combined(s, s);
    for (std::size_t i = 0; i < rad.rows; ++i)
        for (std::size_t j = 0; j < s; ++j) combined.at(i, j) = rad.at(i, j);
    for (std::size_t i = 0; i < t; ++i) combined.at(rad.rows + i, comp_idx[i]) = 1;
    auto project_C = [&](const Vec& b_coords) {
        // solve combined^T z = b_coords, return the complement block of z
        fp::Mat aug(s, s + 1);
        for (std::size_t r2 = 0; r2 < s; ++r2) {
            for (std::size_t c2 = 0; c2 < s; ++c2) aug.at(r2, c2) = combined.at(c2, r2);
            aug.at(r2, s) = b_coords[r2];
        }
        std::size_t rr = 0;
        std::vector<long> pivrow_of_col(s, -1);
        for (std::size_t c2 = 0; c2 < s && rr < s; ++c2) {
            std::size_t piv = rr;
            while (piv < s && aug.at(piv, c2) == 0) ++piv;
            if (piv == s) continue;
            for (std::size_t j = 0; j <= s; ++j)
                std::swap(aug.e[piv * (s + 1) + j], aug.e[rr * (s + 1) + j]);
            fp::u64 inv = fp::invm(aug.at(rr, c2), p);
            for (std::size_t j = 0; j <= s; ++j)
                aug.at(rr, j) = fp::mulm(aug.at(rr, j), inv, p);
            for (std::size_t i2 = 0; i2 < s; ++i2) {
                if (i2 == rr || aug.at(i2, c2) == 0) continue;
                fp::u64 f = aug.at(i2, c2);
                for (std::size_t j = 0; j <= s; ++j)
                    aug.at(i2, j) = fp::subm(aug.at(i2, j), fp::mulm(f, aug.at(rr, j), p), p);
            }
            pivrow_of_col[c2] = static_cast<long>(rr);
            ++rr;
        }
        Vec z(s, 0);
        for (std::size_t c2 = 0; c2 < s; ++c2)
            if (pivrow_of_col[c2] >= 0) z[c2] = aug.at(pivrow_of_col[c2], s);
        Vec out(t);
        for (std::size_t i = 0; i < t; ++i) out[i] = z[rad.rows + i];
        return out;
    };
    FpAlgebra Calg;
    Calg.p = p;
    Calg.N = N;
    Calg.amb_mult = &E_->structure();
    for (std::size_t i = 0; i < t; ++i) Calg.basis_amb.push_back(B.basis_amb[comp_idx[i]]);
    // NOTE: Calg cannot use the inherited mul (products may leave the
    // complement span); override via B + projection
    auto mul_C = [&](const Vec& a, const Vec& b) {
        // lift to B coords
        Vec ab(s, 0), bb(s, 0);
        for (std::size_t i = 0; i < t; ++i) {
            ab[comp_idx[i]] = a[i];
            bb[comp_idx[i]] = b[i];
        }
        Vec prod_amb = B.mul_amb_raw(B.to_amb(ab), B.to_amb(bb));
        return project_C(B.span_coords(prod_amb));
    };
    Vec one_C = project_C(B.one);
    auto pow_C = [&](Vec base, Int e) {
        Vec acc = one_C;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mul_C(acc, base);
            base = mul_C(base, base);
            e >>= 1;
        }
        return acc;
    };
    if (t == 0) throw error("semisimple quotient is zero");
    // Frobenius-fixed subspace W of C
    fp::Mat phim(t, t);
    for (std::size_t i = 0; i < t; ++i) {
        Vec ei(t, 0);
        ei[i] = 1;
        Vec img = pow_C(ei, p_);
        for (std::size_t kk = 0; kk < t; ++kk)
            phim.at(kk, i) = kk == i ? fp::subm(img[kk], 1, p) : img[kk];
    }
    fp::Mat W = fp::kernel(phim, p);
    // split the identity of C into primitive idempotents using W elements
    std::vector<Vec> pieces{one_C};
    Int unit_exp(1);
    for (unsigned f2 = 1; f2 <= t; ++f2) unit_exp = lcm(unit_exp, pow_int(p_, f2) - 1);
    auto is_scalar_on = [&](const Vec& w, const Vec& e) {
        Vec we = mul_C(w, e);
        for (std::size_t j = 0; j < t; ++j)
            if (e[j] != 0) {
                fp::u64 lam = fp::mulm(we[j], fp::invm(e[j], p), p);
                for (std::size_t k2 = 0; k2 < t; ++k2)
                    if (we[k2] != fp::mulm(lam, e[k2], p)) return false;
                return true;
            }
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t wi = 0; wi < W.rows && !changed; ++wi) {
            Vec w(t);
            for (std::size_t j = 0; j < t; ++j) w[j] = W.at(wi, j);
            for (std::size_t pi = 0; pi < pieces.size() && !changed; ++pi) {
                Vec e0 = pieces[pi];
                if (is_scalar_on(w, e0)) continue;
                Vec we = mul_C(w, e0);
                // eigenvalues of we inside e0 C are the roots of its relative
                // minimal polynomial; all lie in F_p since w is
                // Frobenius-fixed
                std::vector<Vec> pw{e0};
                fp::Poly mp;
                for (;;) {
                    fp::Mat stack(pw.size(), t);
                    for (std::size_t i2 = 0; i2 < pw.size(); ++i2)
                        for (std::size_t j2 = 0; j2 < t; ++j2)
                            stack.at(i2, j2) = pw[i2][j2];
                    FpSpan sp = FpSpan::of(stack, p);
                    if (sp.dim() < pw.size()) {
                        const std::size_t kdeg = pw.size() - 1;
                        // solve sum z_c pw[c] = pw[kdeg]
                        fp::Mat aug(t, kdeg + 1);
                        for (std::size_t r2 = 0; r2 < t; ++r2) {
                            for (std::size_t c2 = 0; c2 < kdeg; ++c2)
                                aug.at(r2, c2) = pw[c2][r2];
                            aug.at(r2, kdeg) = pw[kdeg][r2];
                        }
                        std::size_t rr = 0;
                        std::vector<long> pr(kdeg, -1);
                        for (std::size_t c2 = 0; c2 < kdeg && rr < t; ++c2) {
                            std::size_t piv = rr;
                            while (piv < t && aug.at(piv, c2) == 0) ++piv;
                            if (piv == t) continue;
                            for (std::size_t j2 = 0; j2 <= kdeg; ++j2)
                                std::swap(aug.e[piv * (kdeg + 1) + j2],
                                          aug.e[rr * (kdeg + 1) + j2]);
                            fp::u64 inv = fp::invm(aug.at(rr, c2), p);
                            for (std::size_t j2 = 0; j2 <= kdeg; ++j2)
                                aug.at(rr, j2) = fp::mulm(aug.at(rr, j2), inv, p);
                            for (std::size_t i2 = 0; i2 < t; ++i2) {
                                if (i2 == rr || aug.at(i2, c2) == 0) continue;
                                fp::u64 f = aug.at(i2, c2);
                                for (std::size_t j2 = 0; j2 <= kdeg; ++j2)
                                    aug.at(i2, j2) = fp::subm(
                                        aug.at(i2, j2), fp::mulm(f, aug.at(rr, j2), p), p);
                            }
                            pr[c2] = static_cast<long>(rr);
                            ++rr;
                        }
                        mp.assign(kdeg + 1, 0);
                        for (std::size_t c2 = 0; c2 < kdeg; ++c2)
                            if (pr[c2] >= 0)
                                mp[c2] = fp::subm(0, aug.at(pr[c2], kdeg), p);
                        mp[kdeg] = 1;
                        break;
                    }
                    pw.push_back(mul_C(pw.back(), we));
                }
                // roots of mp (all linear over F_p)
                std::vector<fp::u64> lams;
                for (const auto& fac : fp::berlekamp(mp, p))
                    if (fp::degree(fac) == 1)
                        lams.push_back(fp::subm(0, fac[0], p));
                std::vector<Vec> new_pieces;
                Vec rem = e0;
                for (fp::u64 lam : lams) {
                    Vec dshift(t);
                    for (std::size_t j2 = 0; j2 < t; ++j2)
                        dshift[j2] = fp::subm(we[j2], fp::mulm(lam, e0[j2], p), p);
                    Vec unit_part = pow_C(dshift, unit_exp);
                    Vec ue = mul_C(unit_part, e0);
                    Vec elam(t);
                    bool nonzero = false;
                    for (std::size_t j2 = 0; j2 < t; ++j2) {
                        elam[j2] = fp::subm(e0[j2], ue[j2], p);
                        nonzero |= elam[j2] != 0;
                    }
                    if (!nonzero) continue;
                    new_pieces.push_back(elam);
                    for (std::size_t j2 = 0; j2 < t; ++j2)
                        rem[j2] = fp::subm(rem[j2], elam[j2], p);
                }
                bool rem_nonzero = false;
                for (auto v : rem) rem_nonzero |= v != 0;
                if (rem_nonzero) new_pieces.push_back(rem);
                if (new_pieces.size() > 1) {
                    pieces.erase(pieces.begin() + pi);
                    for (auto& np : new_pieces) pieces.push_back(np);
                    changed = true;
                }
            }
        }
    }
    std::vector<unsigned> degrees;
    for (const Vec& e : pieces) {
        fp::Mat M(t, t);
        for (std::size_t i = 0; i < t; ++i) {
            Vec ei(t, 0);
            ei[i] = 1;
            Vec img = mul_C(ei, e);
            for (std::size_t kk = 0; kk < t; ++kk) M.at(kk, i) = img[kk];
        }
        unsigned rank = t - static_cast<unsigned>(fp::kernel(M, p).rows);
        assert(rank >= 1);
        degrees.push_back(rank);
    }
    return degrees;
}

Int FiniteRing::count_units_fast() const {
    std::vector<unsigned> degs = residue_degrees(IntMat::identity(n_));
    Int num(1), den(1);
    for (unsigned f : degs) {
        Int pf = pow_int(p_, f);
        num *= pf - 1;
        den *= pf;
    }
    assert(size_ % den == 0);
    return size_ / den * num;
}

Int FiniteRing::count_subring_units_fast() const {
    std::vector<unsigned> degs = residue_degrees(sub_basis_);
    Int num(1), den(1);
    for (unsigned f : degs) {
        Int pf = pow_int(p_, f);
        num *= pf - 1;
        den *= pf;
    }
    assert(sub_size_ % den == 0);
    return sub_size_ / den * num;
}

} // namespace torusdisc
