#include "torusdisc/numfield.hpp"

#include "torusdisc/errors.hpp"
#include "torusdisc/factor.hpp"
#include "torusdisc/fppoly.hpp"
#include "torusdisc/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace torusdisc {

namespace {

constexpr unsigned kFieldDegreeCap = 6;

// Power sums s_k = Tr(theta^k) of the roots of monic f, k = 0..count-1,
// via Newton's identities.
std::vector<Int> newton_power_sums(const IntPoly& f, unsigned count) {
    const long n = f.degree();
    std::vector<Int> s(count);
    s[0] = n;
    for (long k = 1; k < (long)count; ++k) {
        Int acc(0);
        for (long i = 1; i < k && i <= n; ++i) acc += f.coeff(n - i) * s[k - i];
        if (k <= n) acc += Int(k) * f.coeff(n - k);
        s[k] = -acc;
    }
    return s;
}

// multiply two power-basis rational polynomials mod f
std::vector<Rat> mulmod_power(const std::vector<Rat>& a, const std::vector<Rat>& b,
                              const IntPoly& f) {
    RatPoly pa, pb;
    pa.c = a;
    pa.trim();
    pb.c = b;
    pb.trim();
    RatPoly prod = pa * pb;
    auto [q, r] = prod.divmod(RatPoly::from_int(f));
    std::vector<Rat> out(f.degree());
    for (std::size_t i = 0; i < r.c.size(); ++i) out[i] = r.c[i];
    return out;
}

struct OrderRep {
    // basis rows in the power basis = M / d, M integer in HNF
    IntMat M;
    Int d;

    RatMatrix basis() const {
        return RatMatrix::from_int(M).scaled(make_rat(1, d));
    }
};

OrderRep canonical(IntMat M, Int d) {
    IntegerLattice L = hnf(M);
    IntMat B = L.basis();
    Int g = gcd(B.content(), d);
    if (g > 1) {
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j)
                mpz_divexact(B.at(i, j).get_mpz_t(), B.at(i, j).get_mpz_t(),
                             g.get_mpz_t());
        d /= g;
        B = hnf(B).basis();
    }
    return OrderRep{B, d};
}

// integer structure constants of an order basis (throws if not closed)
std::vector<Int> order_structure(const RatMatrix& W, const RatMatrix& Winv,
                                 const IntPoly& f) {
    const unsigned n = W.rows();
    std::vector<Int> c(n * n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            auto prod = mulmod_power(W.row(i), W.row(j), f);
            // coords w.r.t. basis: prod * Winv
            for (unsigned k = 0; k < n; ++k) {
                Rat v(0);
                for (unsigned l = 0; l < n; ++l) v += prod[l] * Winv.at(l, k);
                if (v.get_den() != 1)
                    throw error("order basis is not multiplicatively closed");
                c[(i * n + j) * n + k] = v.get_num();
                c[(j * n + i) * n + k] = v.get_num();
            }
        }
    return c;
}

// one Round-2 enlargement at p; returns true if the order grew
bool p_enlarge(OrderRep& O, const Int& p, const IntPoly& f) {
    const unsigned n = f.degree();
    if (!p.fits_ulong_p())
        throw error("round-2: prime too large");
    const fp::u64 pp = p.get_ui();
    RatMatrix W = O.basis();
    RatMatrix Winv = W.inverse();
    std::vector<Int> C = order_structure(W, Winv, f);
    auto mul_mod_p = [&](const std::vector<fp::u64>& x,
                         const std::vector<fp::u64>& y) {
        std::vector<fp::u64> z(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                if (y[j] == 0) continue;
                fp::u64 xy = fp::mulm(x[i], y[j], pp);
                for (unsigned k = 0; k < n; ++k) {
                    Int cc;
                    mpz_fdiv_r_ui(cc.get_mpz_t(),
                                  C[(i * n + j) * n + k].get_mpz_t(), pp);
                    z[k] = fp::addm(z[k], fp::mulm(xy, cc.get_ui(), pp), pp);
                }
            }
        }
        return z;
    };
    // Frobenius power e with p^e >= n
    unsigned e = 1;
    {
        Int pe = p;
        while (pe < (long)n) {
            pe *= p;
            ++e;
        }
    }
    // ring identity in order coordinates, reduced mod p
    std::vector<fp::u64> one(n, 0);
    for (unsigned k = 0; k < n; ++k) {
        const Rat& v = Winv.at(0, k); // first power-basis vector is 1
        Int num, den;
        mpz_fdiv_r_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), pp);
        mpz_fdiv_r_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), pp);
        one[k] = fp::mulm(num.get_ui(), fp::invm(den.get_ui(), pp), pp);
    }
    // columns of F = coords of b_i^(p^e)
    fp::Mat F(n, n);
    Int exp = pow_int(p, e);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<fp::u64> sq(n, 0), acc = one;
        sq[i] = 1;
        Int ee = exp;
        while (ee > 0) {
            if (mpz_odd_p(ee.get_mpz_t())) acc = mul_mod_p(acc, sq);
            sq = mul_mod_p(sq, sq);
            ee >>= 1;
        }
        for (unsigned k = 0; k < n; ++k) F.at(k, i) = acc[k];
    }
    fp::Mat rad = fp::kernel(F, pp); // rows = radical basis mod p
    // ideal I = pO + radical lifts, in order coordinates
    IntMat gens(n + rad.rows, n);
    for (unsigned i = 0; i < n; ++i) gens.at(i, i) = p;
    for (std::size_t i = 0; i < rad.rows; ++i)
        for (unsigned j = 0; j < n; ++j)
            gens.at(n + i, j) = Int(static_cast<unsigned long>(rad.at(i, j)));
    IntegerLattice I = hnf(gens);
    assert(I.rank() == n);
    RatMatrix G = RatMatrix::from_int(I.basis());
    RatMatrix Ginv = G.inverse();
    // multiplier conditions: for each ideal basis g_j, y*(M_j Ginv) = 0 mod p
    // where M_j maps order coords y to coords of y*g_j
    fp::Mat big(n, n * n);
    for (unsigned jg = 0; jg < n; ++jg) {
        RatMatrix Mj(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) {
                Rat acc(0);
                for (unsigned l = 0; l < n; ++l)
                    acc += Rat(I.basis().at(jg, l)) *
                           Rat(C[(i * n + l) * n + k]);
                Mj.at(i, k) = acc;
            }
        RatMatrix Nj = Mj * Ginv;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned k = 0; k < n; ++k) {
                const Rat& v = Nj.at(i, k);
                if (v.get_den() != 1)
                    throw error("round-2: multiplier matrix not integral");
                Int r;
                mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num().get_mpz_t(), pp);
                big.at(i, jg * n + k) = r.get_ui();
            }
    }
    // left kernel: {y : y * big = 0}  <=>  big^T y = 0
    fp::Mat bigT(n * n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n * n; ++j) bigT.at(j, i) = big.at(i, j);
    fp::Mat ker = fp::kernel(bigT, pp);
    if (ker.rows == 0) return false;
    // O' = (1/p) * lattice(p e_i, kernel lifts) in order coordinates
    IntMat up(n + ker.rows, n);
    for (unsigned i = 0; i < n; ++i) up.at(i, i) = p;
    for (std::size_t i = 0; i < ker.rows; ++i)
        for (unsigned j = 0; j < n; ++j)
            up.at(n + i, j) = Int(static_cast<unsigned long>(ker.at(i, j)));
    IntegerLattice Lup = hnf(up);
    Int detH(1);
    for (unsigned i = 0; i < n; ++i) detH *= Lup.basis().at(i, i);
    if (detH == pow_int(p, n)) return false; // nothing beyond pO -> stable
    // new power-basis representation: (Lup/p) * (M/d)
    IntMat newM = Lup.basis() * O.M;
    O = canonical(newM, O.d * p);
    return true;
}

} // namespace

NumberField NumberField::create(const IntPoly& f) {
    if (!f.is_monic()) throw not_monic("maximal_order: polynomial not monic");
    if (f.degree() > (long)kFieldDegreeCap)
        throw degree_too_large("maximal_order: degree cap is 6");
    if (f.degree() < 1) throw error("maximal_order: constant polynomial");
    if (!is_irreducible(f))
        throw not_irreducible("maximal_order: polynomial reducible");
    const unsigned n = f.degree();
    Int disc_f = poly_discriminant(f);
    OrderRep O{IntMat::identity(n), Int(1)};
    if (n > 1) {
        for (const auto& [p, mult] : factor_integer(abs(disc_f))) {
            if (mult < 2) continue;
            while (p_enlarge(O, p, f)) {
            }
        }
    }
    NumberField K;
    K.f_ = f;
    K.degree_ = n;
    K.basis_ = O.basis();
    K.basis_inv_ = K.basis_.inverse();
    Rat detW = K.basis_.det();
    Rat idx = detW < 0 ? Rat(-1) / detW : Rat(1) / detW;
    assert(idx.get_den() == 1);
    K.eq_index_ = idx.get_num();
    K.disc_ = disc_f / (K.eq_index_ * K.eq_index_);
    assert(K.disc_ * K.eq_index_ * K.eq_index_ == disc_f);
    K.finish();
    return K;
}

NumberField NumberField::create_with_basis(const IntPoly& f, const RatMatrix& basis) {
    NumberField computed = create(f);
    // verify the supplied basis spans the same order
    if (basis.rows() != computed.degree_ || basis.cols() != computed.degree_)
        throw error("supplied integral basis has wrong shape");
    RationalLattice supplied = RationalLattice::from_rows(basis);
    RationalLattice ours = RationalLattice::from_rows(computed.basis_);
    if (!(supplied == ours))
        throw error("supplied integral basis fails verification "
                    "(ring closure / discriminant check)");
    return computed;
}

void NumberField::finish() {
    const unsigned n = degree_;
    power_traces_ = newton_power_sums(f_, 2 * n - 1 > 0 ? 2 * n - 1 : 1);
    // Gram of the trace form on the integral basis
    gram_ = RatMatrix(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            auto prod = mulmod_power(basis_.row(i), basis_.row(j), f_);
            Rat tr(0);
            for (unsigned k = 0; k < n; ++k) tr += prod[k] * Rat(power_traces_[k]);
            gram_.at(i, j) = tr;
            gram_.at(j, i) = tr;
        }
    Rat detg = gram_.det();
    assert(detg.get_den() == 1);
    assert(detg.get_num() == disc_);
    mult_ = order_structure(basis_, basis_inv_, f_);
    // the integral basis contains 1
    std::vector<Rat> e0(n, Rat(0));
    e0[0] = 1;
    for (const Rat& c : from_power_basis(e0))
        if (c.get_den() != 1) throw error("order does not contain 1");
}

Rat NumberField::trace_on_basis(const std::vector<Rat>& coords) const {
    // Tr is linear; Tr(b_i) from power-basis expansion
    Rat tr(0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (coords[i] == 0) continue;
        Rat ti(0);
        for (unsigned k = 0; k < degree_; ++k)
            ti += basis_.at(i, k) * Rat(power_traces_[k]);
        tr += coords[i] * ti;
    }
    return tr;
}

std::vector<Rat> NumberField::multiply(const std::vector<Rat>& x,
                                       const std::vector<Rat>& y) const {
    std::vector<Rat> z(degree_, Rat(0));
    for (unsigned i = 0; i < degree_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) {
            if (y[j] == 0) continue;
            Rat xy = x[i] * y[j];
            for (unsigned k = 0; k < degree_; ++k) {
                const Int& c = structure(i, j, k);
                if (c != 0) z[k] += xy * Rat(c);
            }
        }
    }
    return z;
}

std::vector<Rat> NumberField::one() const {
    std::vector<Rat> e0(degree_, Rat(0));
    e0[0] = 1;
    return from_power_basis(e0);
}

std::vector<Rat> NumberField::from_power_basis(const std::vector<Rat>& c) const {
    std::vector<Rat> out(degree_, Rat(0));
    for (unsigned k = 0; k < degree_; ++k) {
        Rat v(0);
        for (unsigned l = 0; l < degree_; ++l) v += c[l] * basis_inv_.at(l, k);
        out[k] = v;
    }
    return out;
}

const char* galois_type_name(GaloisType t) {
    switch (t) {
        case GaloisType::C1: return "C1";
        case GaloisType::C2: return "C2";
        case GaloisType::C3: return "C3";
        case GaloisType::S3: return "S3";
        case GaloisType::C4: return "C4";
        case GaloisType::V4: return "V4";
        case GaloisType::D4: return "D4";
        case GaloisType::A4: return "A4";
        case GaloisType::S4: return "S4";
    }
    return "?";
}

unsigned galois_group_order(GaloisType t) {
    switch (t) {
        case GaloisType::C1: return 1;
        case GaloisType::C2: return 2;
        case GaloisType::C3: return 3;
        case GaloisType::S3: return 6;
        case GaloisType::C4: return 4;
        case GaloisType::V4: return 4;
        case GaloisType::D4: return 8;
        case GaloisType::A4: return 12;
        case GaloisType::S4: return 24;
    }
    return 0;
}

namespace {

bool is_rat_square(const Rat& x) {
    if (x < 0) return false;
    return is_perfect_square(x.get_num()) && is_perfect_square(x.get_den());
}

// beta^2 - 4 gamma in { u^2, D u^2 } for rational u?
bool splits_over_sqrt(const Rat& disc2, const Int& D) {
    if (disc2 == 0) return true;
    if (is_rat_square(disc2)) return true;
    return is_rat_square(disc2 / Rat(D));
}

} // namespace

GaloisType galois_type_exact(const IntPoly& f) {
    if (!f.is_monic()) throw not_monic("galois_type_exact: not monic");
    if (f.degree() > 4)
        throw degree_too_large("galois_type_exact: exact mode caps at degree 4");
    if (!is_irreducible(f))
        throw not_irreducible("galois_type_exact: polynomial reducible");
    switch (f.degree()) {
        case 1: return GaloisType::C1;
        case 2: return GaloisType::C2;
        case 3:
            return is_perfect_square(poly_discriminant(f)) ? GaloisType::C3
                                                           : GaloisType::S3;
        default: break;
    }
    // quartic: resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d + c^2 - 4bd)
    const Int a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
    IntPoly R({-(a * a * d + c * c - 4 * b * d), a * c - 4 * d, -b, Int(1)});
    Int D = poly_discriminant(f);
    std::vector<Int> roots;
    for (const auto& [g, m] : factor_over_Q(R))
        if (g.degree() == 1) {
            // monic integer cubic: linear factor x - r with r integer
            assert(g.lc() == 1);
            roots.push_back(-g.coeff(0));
        }
    if (roots.empty()) return is_perfect_square(D) ? GaloisType::A4 : GaloisType::S4;
    if (roots.size() == 3) return GaloisType::V4;
    const Int r = roots[0];
    Rat t1 = Rat(r * r - 4 * d);
    Rat t2 = Rat(a * a - 4 * (b - r));
    return (splits_over_sqrt(t1, D) && splits_over_sqrt(t2, D)) ? GaloisType::C4
                                                                : GaloisType::D4;
}

} // namespace torusdisc
