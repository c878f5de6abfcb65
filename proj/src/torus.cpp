#include "torusdisc/torus.hpp"

#include "torusdisc/errors.hpp"
#include "torusdisc/factor.hpp"

#include <algorithm>
#include <cassert>

namespace torusdisc {

namespace {

// Coordinate solver for a fixed spanning set: rows of F span a subspace of
// Q^m; solve x = c * F for vectors x in the span.
class SpanSolver {
  public:
    explicit SpanSolver(const RatMatrix& F) : F_(F) {
        RatMatrix R = F;
        pivots_ = rref(R);
        if (pivots_.size() != F.rows())
            throw error("span solver: rows are dependent");
        RatMatrix sq(F.rows(), F.rows());
        for (std::size_t i = 0; i < F.rows(); ++i)
            for (std::size_t j = 0; j < pivots_.size(); ++j)
                sq.at(i, j) = F.at(i, pivots_[j]);
        inv_ = sq.inverse();
    }

    // returns coords, or nullopt if x is not in the span
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& x) const {
        std::vector<Rat> c(F_.rows(), Rat(0));
        for (std::size_t i = 0; i < F_.rows(); ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < pivots_.size(); ++j)
                s += x[pivots_[j]] * inv_.at(j, i);
            c[i] = s;
        }
        // verify c * F == x
        for (std::size_t j = 0; j < F_.cols(); ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < F_.rows(); ++i)
                s += c[i] * F_.at(i, j);
            if (s != x[j]) return std::nullopt;
        }
        return c;
    }

  private:
    RatMatrix F_;
    std::vector<std::size_t> pivots_;
    RatMatrix inv_;
};

} // namespace

std::vector<RatMatrix> algebra_closure(const std::vector<RatMatrix>& gens) {
    if (gens.empty()) throw error("algebra_closure: no generators");
    const std::size_t n = gens[0].rows();
    for (const RatMatrix& g : gens)
        if (g.rows() != n || g.cols() != n)
            throw error("algebra_closure: generators must be square, equal size");
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(gens[i] * gens[j] == gens[j] * gens[i]))
                throw non_commuting("generators do not commute");
    std::vector<RatMatrix> basis{RatMatrix::identity(n)};
    RatMatrix flat(1, n * n);
    flat.set_row(0, basis[0].flatten());
    std::vector<std::size_t> piv;
    {
        RatMatrix r = flat;
        piv = rref(r);
    }
    std::size_t scan = 0;
    while (scan < basis.size()) {
        for (const RatMatrix& g : gens) {
            RatMatrix prod = basis[scan] * g;
            RatMatrix trial(flat.rows() + 1, n * n);
            for (std::size_t i = 0; i < flat.rows(); ++i)
                trial.set_row(i, flat.row(i));
            trial.set_row(flat.rows(), prod.flatten());
            RatMatrix r = trial;
            if (rref(r).size() == trial.rows()) {
                basis.push_back(prod);
                flat = trial;
                if (basis.size() > n)
                    throw non_semisimple(
                        "algebra dimension exceeds the ambient degree");
            }
        }
        ++scan;
    }
    return basis;
}

IntegerLattice matrix_order(const std::vector<RatMatrix>& algebra_basis,
                            unsigned n) {
    const std::size_t m = static_cast<std::size_t>(n) * n;
    RatMatrix rows(algebra_basis.size(), m);
    for (std::size_t i = 0; i < algebra_basis.size(); ++i)
        rows.set_row(i, algebra_basis[i].flatten());
    // clear denominators row-wise (preserves the span), then saturate
    IntMat cleared(rows.rows(), m);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        Int d(1);
        for (std::size_t j = 0; j < m; ++j) d = lcm(d, rows.at(i, j).get_den());
        for (std::size_t j = 0; j < m; ++j) {
            Rat v = rows.at(i, j) * Rat(d);
            cleared.at(i, j) = v.get_num();
        }
    }
    return saturate(hnf(cleared));
}

std::vector<Rat> EmbeddedTorus::e_coords_of_flat(const std::vector<Rat>& flat) const {
    RatMatrix F(dim_, static_cast<std::size_t>(n_) * n_);
    for (unsigned i = 0; i < dim_; ++i) F.set_row(i, basis_[i].flatten());
    SpanSolver solver(F);
    auto c = solver.solve(flat);
    if (!c) throw error("vector not in the algebra span");
    return *c;
}

Rat EmbeddedTorus::trace_form(const std::vector<Rat>& x_flat,
                              const std::vector<Rat>& y_flat) const {
    auto cx = e_coords_of_flat(x_flat);
    auto cy = e_coords_of_flat(y_flat);
    // multiply in O_E coordinates, take the algebra trace
    auto to_oe = [&](const std::vector<Rat>& c) {
        std::vector<Rat> out(dim_, Rat(0));
        for (unsigned k = 0; k < dim_; ++k) {
            Rat s(0);
            for (unsigned l = 0; l < dim_; ++l) s += c[l] * to_etale_.at(l, k);
            out[k] = s;
        }
        return out;
    };
    auto prod = etale_->multiply(to_oe(cx), to_oe(cy));
    return etale_->trace(prod);
}

EmbeddedTorus EmbeddedTorus::from_generators(unsigned n,
                                             std::vector<RatMatrix> gens) {
    EmbeddedTorus T;
    T.n_ = n;
    T.generators_ = std::move(gens);
    T.basis_ = algebra_closure(T.generators_);
    T.dim_ = T.basis_.size();
    const unsigned d = T.dim_;
    const std::size_t m = static_cast<std::size_t>(n) * n;

    // span solver for E inside Q^(n^2)
    RatMatrix F(d, m);
    for (unsigned i = 0; i < d; ++i) F.set_row(i, T.basis_[i].flatten());
    SpanSolver span(F);

    // structure constants on the matrix basis
    std::vector<Rat> C(static_cast<std::size_t>(d) * d * d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            auto c = span.solve((T.basis_[i] * T.basis_[j]).flatten());
            if (!c) throw error("algebra closure is not closed");
            for (unsigned k = 0; k < d; ++k) C[(i * d + j) * d + k] = (*c)[k];
        }
    auto mul_e = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        std::vector<Rat> z(d, Rat(0));
        for (unsigned i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (y[j] == 0) continue;
                Rat xy = x[i] * y[j];
                for (unsigned k = 0; k < d; ++k) {
                    const Rat& cc = C[(i * d + j) * d + k];
                    if (cc != 0) z[k] += xy * cc;
                }
            }
        }
        return z;
    };

    // semisimplicity: squarefree minimal polynomials of the generators and a
    // nondegenerate regular trace form
    auto min_poly = [&](const std::vector<Rat>& x) {
        std::vector<std::vector<Rat>> pw;
        std::vector<Rat> one(d, Rat(0));
        one[0] = 1; // basis_[0] = I
        pw.push_back(one);
        pw.push_back(x);
        for (;;) {
            RatMatrix mstack(pw.size(), d);
            for (std::size_t i = 0; i < pw.size(); ++i) mstack.set_row(i, pw[i]);
            RatMatrix r = mstack;
            if (rref(r).size() < pw.size()) {
                RatMatrix prev(pw.size() - 1, d);
                for (std::size_t i = 0; i + 1 < pw.size(); ++i)
                    prev.set_row(i, pw[i]);
                SpanSolver s2(prev);
                auto c = s2.solve(pw.back());
                assert(c.has_value());
                RatPoly g;
                g.c.assign(pw.size(), Rat(0));
                for (std::size_t i = 0; i + 1 < pw.size(); ++i) g.c[i] = -(*c)[i];
                g.c[pw.size() - 1] = 1;
                return g;
            }
            pw.push_back(mul_e(pw.back(), x));
        }
    };
    for (const RatMatrix& g : T.generators_) {
        auto cg = span.solve(g.flatten());
        if (!cg) throw error("generator outside its own algebra");
        RatPoly mp = min_poly(*cg);
        IntPoly mpz_poly = mp.to_primitive_int();
        if (poly_gcd(mpz_poly, mpz_poly.derivative()).degree() != 0)
            throw non_semisimple("generator minimal polynomial is not squarefree");
    }
    // regular trace of mult-by-b_i
    auto reg_trace = [&](unsigned i) {
        Rat t(0);
        for (unsigned j = 0; j < d; ++j) t += C[(i * d + j) * d + j];
        return t;
    };
    RatMatrix gram(d, d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
            // Tr(b_i b_j) = sum_k C_ijk Tr(b_k)
            Rat t(0);
            for (unsigned k = 0; k < d; ++k) {
                const Rat& cc = C[(i * d + j) * d + k];
                if (cc != 0) t += cc * reg_trace(k);
            }
            gram.at(i, j) = t;
        }
    if (gram.det() == 0)
        throw non_semisimple("degenerate trace form");

    // primitive element search: theta = sum seed^i b_i over the basis,
    // deterministic seeds (generic elements of an etale algebra are primitive)
    std::vector<Rat> theta;
    RatPoly g_min;
    {
        bool found = false;
        for (long seed = 1; seed <= 400 && !found; ++seed) {
            std::vector<Rat> th(d, Rat(0));
            Rat pw(1);
            for (unsigned i = 0; i < d; ++i) {
                th[i] = pw;
                pw *= Rat(seed);
            }
            RatPoly mp = min_poly(th);
            if (mp.degree() == (long)d) {
                theta = th;
                g_min = mp;
                found = true;
            }
        }
        if (!found) throw error("no primitive element found");
    }
    // rescale theta so its minimal polynomial is integer monic
    Int scale(1);
    for (const Rat& c : g_min.c) scale = lcm(scale, c.get_den());
    if (scale > 1) {
        for (unsigned i = 0; i < d; ++i) theta[i] *= Rat(scale);
        // min poly of s*theta: s^d g(x/s)
        RatPoly g2;
        g2.c.assign(g_min.c.size(), Rat(0));
        for (std::size_t k = 0; k < g_min.c.size(); ++k)
            g2.c[k] = g_min.c[k] * pow_rat(Rat(scale), static_cast<long>(d - k));
        g_min = g2;
    }
    IntPoly g_int;
    {
        std::vector<Int> c(g_min.c.size());
        for (std::size_t i = 0; i < g_min.c.size(); ++i) {
            assert(g_min.c[i].get_den() == 1);
            c[i] = g_min.c[i].get_num();
        }
        g_int = IntPoly(std::move(c));
    }
    // abstract etale structure from the distinct irreducible factors
    std::vector<std::pair<IntPoly, unsigned>> irr = factor_over_Q(g_int);
    std::vector<std::pair<IntPoly, unsigned>> flat_factors;
    for (auto& [q, mlt] : irr) {
        assert(mlt == 1); // squarefree by semisimplicity
        flat_factors.emplace_back(q, 1);
    }
    T.etale_ = std::make_shared<EtaleAlgebra>(
        EtaleAlgebra::from_factors(flat_factors));

    // powers of theta for idempotent evaluation
    std::vector<std::vector<Rat>> theta_pow;
    {
        std::vector<Rat> one(d, Rat(0));
        one[0] = 1;
        theta_pow.push_back(one);
        for (unsigned k = 1; k < d; ++k)
            theta_pow.push_back(mul_e(theta_pow.back(), theta));
    }
    auto eval_at_theta = [&](const RatPoly& p) {
        std::vector<Rat> out(d, Rat(0));
        for (std::size_t k = 0; k < p.c.size(); ++k) {
            if (p.c[k] == 0) continue;
            for (unsigned i = 0; i < d; ++i) out[i] += p.c[k] * theta_pow[k][i];
        }
        return out;
    };
    // O_E basis vectors in E coordinates
    RatMatrix P(d, d); // row r = O_E basis element r in E coords
    {
        unsigned row = 0;
        RatPoly g_rat = RatPoly::from_int(g_int);
        for (const auto& [q, mlt] : flat_factors) {
            (void)mlt;
            // idempotent for this factor
            RatPoly u = g_rat.divmod(RatPoly::from_int(q)).first;
            RatPoly gg, s, t;
            rat_poly_xgcd(u, RatPoly::from_int(q), gg, s, t);
            assert(gg.degree() == 0);
            // s*u = 1 mod q; idempotent e = u*s mod g
            RatPoly e = (u * s).divmod(g_rat).second;
            std::vector<Rat> e_coords = eval_at_theta(e);
            // theta restricted to the factor: theta * e
            const NumberField& L = [&]() -> const NumberField& {
                for (const auto& fac : T.etale_->factors())
                    if (fac.field->defining_poly() == q) return *fac.field;
                throw error("factor lookup failed");
            }();
            for (unsigned r = 0; r < L.degree(); ++r) {
                // basis row r of O_L in the power basis of theta_i
                std::vector<Rat> acc(d, Rat(0));
                std::vector<Rat> tp = e_coords; // e * theta^0
                for (unsigned l = 0; l < L.degree(); ++l) {
                    const Rat& coef = L.integral_basis().at(r, l);
                    if (coef != 0)
                        for (unsigned i = 0; i < d; ++i) acc[i] += coef * tp[i];
                    if (l + 1 < L.degree()) tp = mul_e(tp, theta);
                }
                P.set_row(row++, acc);
            }
        }
        assert(row == d);
    }
    T.from_etale_ = P;
    T.to_etale_ = P.inverse();

    // Lambda
    T.lambda_ = matrix_order(T.basis_, n);
    if (T.lambda_.rank() != d) throw error("matrix order has wrong rank");
    {
        std::vector<Int> id_flat(m, Int(0));
        for (unsigned i = 0; i < n; ++i) id_flat[i * n + i] = 1;
        assert(T.lambda_.contains(id_flat));
    }
    // Lambda in O_E coordinates (must be integral: Lambda sits inside O_E)
    IntMat lam_oe(d, d);
    for (unsigned i = 0; i < d; ++i) {
        std::vector<Rat> flat(m);
        for (std::size_t j = 0; j < m; ++j)
            flat[j] = Rat(T.lambda_.basis().at(i, j));
        auto ec = span.solve(flat);
        if (!ec) throw error("lattice row escaped the algebra");
        for (unsigned k = 0; k < d; ++k) {
            Rat v(0);
            for (unsigned l = 0; l < d; ++l) v += (*ec)[l] * T.to_etale_.at(l, k);
            if (v.get_den() != 1)
                throw error("matrix order does not embed in the maximal order");
            lam_oe.at(i, k) = v.get_num();
        }
    }
    T.lambda_oe_ = hnf(lam_oe);
    T.index_ol_ = lattice_index(T.lambda_oe_, IntegerLattice::full(d));

    // Disc(Lambda) via the trace Gram on Lambda's basis (in O_E coordinates,
    // where the structure constants are integral)
    {
        RatMatrix lam_rows(d, d);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned k = 0; k < d; ++k)
                lam_rows.at(i, k) = Rat(T.lambda_oe_.basis().at(i, k));
        RatMatrix g2(d, d);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = i; j < d; ++j) {
                auto prod = T.etale_->multiply(lam_rows.row(i), lam_rows.row(j));
                Rat tr = T.etale_->trace(prod);
                g2.at(i, j) = tr;
                g2.at(j, i) = tr;
            }
        Rat detg = g2.det();
        assert(detg.get_den() == 1);
        T.disc_ = abs(detg.get_num());
    }
    // cross-check Disc = d_E * [O_E : Lambda]^2
    assert(T.disc_ == T.etale_->discriminant() * T.index_ol_ * T.index_ol_);

    // canonical tensor nu = wedge of the HNF basis of Lambda
    {
        std::vector<std::vector<Rat>> rows;
        for (unsigned i = 0; i < d; ++i) {
            std::vector<Rat> r(m);
            for (std::size_t j = 0; j < m; ++j)
                r[j] = Rat(T.lambda_.basis().at(i, j));
            rows.push_back(r);
        }
        WedgeVector w = wedge(rows, m);
        std::vector<Rat> dense = w.to_dense();
        std::vector<Int> nu(dense.size());
        Int content(0);
        int sign = 0;
        for (std::size_t i = 0; i < dense.size(); ++i) {
            assert(dense[i].get_den() == 1);
            nu[i] = dense[i].get_num();
            if (sign == 0 && nu[i] != 0) sign = nu[i] > 0 ? 1 : -1;
            content = gcd(content, nu[i]);
        }
        if (sign < 0)
            for (Int& x : nu) x = -x;
        if (content != 1)
            throw primitivity_violation("wedge of a saturated lattice basis "
                                        "must be primitive");
        T.nu_ = std::move(nu);
    }
    // delta from the factored tensor: content(nu) = 1, so the gcd below is
    // gcd(D, 1) = 1; kept in the written form for clarity of the invariant
    {
        Int g = gcd(T.disc_, Int(1));
        T.delta_ = T.disc_ / g;
    }
    return T;
}

EmbeddedTorus EmbeddedTorus::embed_regular(
    const std::vector<std::pair<IntPoly, unsigned>>& factors,
    const std::optional<IntMat>& order_in_oe) {
    EtaleAlgebra A = EtaleAlgebra::from_factors(factors);
    const unsigned N = A.dim();
    IntMat M = order_in_oe.value_or(IntMat::identity(N));
    if (M.rows() != N || M.cols() != N)
        throw error("embed_regular: order lattice must be N x N");
    IntegerLattice ML = hnf(M);
    if (ML.rank() != N) throw error("embed_regular: order lattice not full rank");
    RatMatrix Mb = RatMatrix::from_int(ML.basis());
    RatMatrix Mb_inv = Mb.inverse();
    // multiplication matrix of each O_E basis element on the M-basis
    std::vector<RatMatrix> gens;
    for (unsigned b = 0; b < N; ++b) {
        std::vector<Rat> eb(N, Rat(0));
        eb[b] = 1;
        RatMatrix G(N, N);
        for (unsigned j = 0; j < N; ++j) {
            auto prod = A.multiply(Mb.row(j), eb);
            // coords w.r.t. M basis
            for (unsigned k = 0; k < N; ++k) {
                Rat s(0);
                for (unsigned l = 0; l < N; ++l) s += prod[l] * Mb_inv.at(l, k);
                G.at(j, k) = s;
            }
        }
        gens.push_back(G);
    }
    return from_generators(N, std::move(gens));
}

EmbeddedTorus EmbeddedTorus::conjugate(const RatMatrix& g) const {
    if (g.rows() != n_ || g.cols() != n_)
        throw singular_matrix("conjugator has wrong shape");
    RatMatrix ginv;
    try {
        ginv = g.inverse();
    } catch (const singular_matrix&) {
        throw singular_matrix("conjugator is singular");
    }
    std::vector<RatMatrix> gens;
    for (const RatMatrix& X : generators_) gens.push_back(g * X * ginv);
    return from_generators(n_, std::move(gens));
}

Int EmbeddedTorus::delta_by_expansion(bool force) const {
    if (n_ > 3 && !force)
        throw error("tensor expansion is a debug path; pass force for n > 3");
    // eta = (nu tensor nu) / D expanded coordinatewise
    Int l(1);
    for (const Int& a : nu_)
        for (const Int& b : nu_) {
            Rat entry = make_rat(a * b, disc_);
            l = lcm(l, entry.get_den());
        }
    return l;
}

CanonicalTensor canonical_tensor(const EmbeddedTorus& T) {
    CanonicalTensor out;
    out.nu = T.nu();
    out.denom = T.disc_lambda();
    out.degree = T.dim();
    out.ambient = T.ambient_n() * T.ambient_n();
    return out;
}

HeightDiscReport verify_height_equals_disc_sample(const EmbeddedTorus& T) {
    HeightDiscReport r;
    r.disc = T.disc_lambda();
    r.delta = T.delta();
    r.equal = r.disc == r.delta;
    return r;
}

Int delta_of_transformed_tensor(const EmbeddedTorus& T, const RatMatrix& g) {
    const unsigned n = T.ambient_n();
    const unsigned m = n * n;
    const unsigned d = T.dim();
    RatMatrix ginv = g.inverse();
    // linear action X -> g X g^-1 on flattened matrix space (row convention:
    // out_flat = L applied to in_flat)
    RatMatrix L(m, m);
    for (unsigned i = 0; i < m; ++i) {
        RatMatrix X(n, n);
        X.at(i / n, i % n) = 1;
        RatMatrix Y = g * X * ginv;
        auto y = Y.flatten();
        for (unsigned j = 0; j < m; ++j) L.at(i, j) = y[j];
    }
    // nu' = (wedge^d L) nu: nu'_S = sum_T minor_L(T rows, S cols) nu_T
    // (apply L to each basis d-vector e_T = rows T of identity: the image is
    // rows T of L, whose wedge has S-coordinate = minor over columns S)
    std::uint64_t count = binomial(m, d).get_ui();
    std::vector<Rat> nu_prime(count, Rat(0));
    const std::vector<Int>& nu = T.nu();
    for (std::uint64_t t = 0; t < count; ++t) {
        if (nu[t] == 0) continue;
        auto rows_idx = subset_unrank(t, m, d);
        std::vector<std::vector<Rat>> rows;
        for (unsigned r : rows_idx) rows.push_back(L.row(r));
        WedgeVector w = wedge(rows, m);
        auto dense = w.to_dense();
        for (std::uint64_t s = 0; s < count; ++s)
            if (dense[s] != 0) nu_prime[s] += Rat(nu[t]) * dense[s];
    }
    // delta of (nu' tensor nu') / D for rational nu'
    Int h = finite_height(nu_prime);
    Int g0(0);
    for (const Rat& x : nu_prime) {
        Rat scaled = x * Rat(h);
        assert(scaled.get_den() == 1);
        g0 = gcd(g0, scaled.get_num());
    }
    if (g0 == 0) throw error("transformed tensor vanished");
    Int numerator = h * h * T.disc_lambda();
    return numerator / gcd(numerator, g0 * g0);
}

} // namespace torusdisc
