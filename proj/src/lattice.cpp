#include "torusdisc/lattice.hpp"

#include "torusdisc/errors.hpp"

#include <algorithm>
#include <cassert>

namespace torusdisc {

namespace {

// In-place row HNF on m (optionally carrying a transform matrix u with the
// same row operations). Rows end up sorted by pivot column, zero rows last.
// Returns the rank.
std::size_t hnf_inplace(IntMat& m, IntMat* u) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0; // next pivot row
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // eliminate below row r in column c via gcd row operations
        for (;;) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m.at(i, c) != 0 &&
                    (piv == rows || abs(m.at(i, c)) < abs(m.at(piv, c))))
                    piv = i;
            if (piv == rows) break; // column all zero below r
            m.swap_rows(r, piv);
            if (u) u->swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                Int q;
                // round-to-nearest quotient keeps entries small
                Int num = m.at(i, c), den = m.at(r, c);
                mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if ((num - q * den) * 2 > abs(den)) q += den > 0 ? 1 : -1;
                if (q != 0) {
                    for (std::size_t j = 0; j < cols; ++j)
                        m.at(i, j) -= q * m.at(r, j);
                    if (u)
                        for (std::size_t j = 0; j < u->cols(); ++j)
                            u->at(i, j) -= q * u->at(r, j);
                }
                if (m.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m.at(r, c) == 0) continue;
        // positive pivot
        if (m.at(r, c) < 0) {
            for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
            if (u)
                for (std::size_t j = 0; j < u->cols(); ++j)
                    u->at(r, j) = -u->at(r, j);
        }
        // reduce entries above pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(),
                       m.at(r, c).get_mpz_t());
            if (q != 0) {
                for (std::size_t j = 0; j < cols; ++j)
                    m.at(i, j) -= q * m.at(r, j);
                if (u)
                    for (std::size_t j = 0; j < u->cols(); ++j)
                        u->at(i, j) -= q * u->at(r, j);
            }
        }
        ++r;
    }
    return r;
}

IntMat take_rows(const IntMat& m, std::size_t n) {
    IntMat out(n, m.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

} // namespace

IntegerLattice IntegerLattice::from_rows(const IntMat& m) { return hnf(m); }

IntegerLattice IntegerLattice::zero(std::size_t ambient) {
    IntegerLattice L;
    L.ambient_ = ambient;
    L.basis_ = IntMat(0, ambient);
    return L;
}

IntegerLattice IntegerLattice::full(std::size_t ambient) {
    return hnf(IntMat::identity(ambient));
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    return coordinates(v).has_value();
}

std::optional<std::vector<Int>> IntegerLattice::coordinates(
    const std::vector<Int>& v) const {
    assert(v.size() == ambient_);
    std::vector<Int> w = v;
    std::vector<Int> coef(rank());
    std::size_t row = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (row < rank() && basis_.at(row, c) != 0) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[c].get_mpz_t(),
                        basis_.at(row, c).get_mpz_t());
            if (r != 0) return std::nullopt;
            coef[row] = q;
            if (q != 0)
                for (std::size_t j = c; j < ambient_; ++j)
                    w[j] -= q * basis_.at(row, j);
            ++row;
        } else if (w[c] != 0) {
            return std::nullopt;
        }
    }
    return coef;
}

IntegerLattice hnf(const IntMat& m) {
    IntMat work = m;
    std::size_t rank = hnf_inplace(work, nullptr);
    return IntegerLattice(m.cols(), take_rows(work, rank));
}

HnfTransform hnf_with_transform(const IntMat& m) {
    IntMat work = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t rank = hnf_inplace(work, &u);
    return HnfTransform{std::move(work), std::move(u), rank};
}

std::vector<Int> snf_diagonal(IntMat m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> divisors;
    std::size_t top = 0;
    while (top < n) {
        // find minimal nonzero entry in the submatrix at (top, top)
        std::size_t pi = m.rows(), pj = 0;
        for (std::size_t i = top; i < m.rows(); ++i)
            for (std::size_t j = top; j < m.cols(); ++j)
                if (m.at(i, j) != 0 &&
                    (pi == m.rows() || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m.rows()) break; // submatrix zero
        m.swap_rows(top, pi);
        if (pj != top)
            for (std::size_t i = 0; i < m.rows(); ++i)
                std::swap(m.at(i, pj), m.at(i, top));
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = top + 1; i < m.rows(); ++i) {
                if (m.at(i, top) == 0) continue;
                Int q = m.at(i, top) / m.at(top, top);
                for (std::size_t j = top; j < m.cols(); ++j)
                    m.at(i, j) -= q * m.at(top, j);
                if (m.at(i, top) != 0) {
                    m.swap_rows(top, i);
                    again = true;
                }
            }
            for (std::size_t j = top + 1; j < m.cols(); ++j) {
                if (m.at(top, j) == 0) continue;
                Int q = m.at(top, j) / m.at(top, top);
                for (std::size_t i = top; i < m.rows(); ++i)
                    m.at(i, j) -= q * m.at(i, top);
                if (m.at(top, j) != 0) {
                    for (std::size_t i = 0; i < m.rows(); ++i)
                        std::swap(m.at(i, top), m.at(i, j));
                    again = true;
                }
            }
        }
        // pivot must divide the rest of the submatrix
        bool fixed = true;
        for (std::size_t i = top + 1; i < m.rows() && fixed; ++i)
            for (std::size_t j = top + 1; j < m.cols() && fixed; ++j)
                if (m.at(i, j) % m.at(top, top) != 0) {
                    for (std::size_t kk = top; kk < m.cols(); ++kk)
                        m.at(top, kk) += m.at(i, kk);
                    fixed = false;
                }
        if (!fixed) continue; // redo this pivot
        divisors.push_back(abs(m.at(top, top)));
        ++top;
    }
    while (divisors.size() < n) divisors.push_back(Int(0));
    return divisors;
}

Int lattice_index(const IntegerLattice& sub, const IntegerLattice& sup) {
    if (sub.ambient_dim() != sup.ambient_dim())
        throw rank_mismatch("lattice_index: ambient dimension mismatch");
    if (sub.rank() != sup.rank())
        throw rank_mismatch("lattice_index: rank mismatch");
    IntMat C(sub.rank(), sub.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto coords = sup.coordinates(sub.basis().row(i));
        if (!coords)
            throw not_sublattice("lattice_index: basis row not in superlattice");
        C.set_row(i, *coords);
    }
    Int idx(1);
    for (const Int& d : snf_diagonal(C)) idx *= d;
    return abs(idx);
}

IntMat kernel_basis(const IntMat& A) {
    HnfTransform t = hnf_with_transform(A.transpose());
    std::size_t dim = A.cols() - t.rank;
    IntMat out(dim, A.cols());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            out.at(i, j) = t.u.at(t.rank + i, j);
    return out;
}

IntegerLattice saturate(const IntegerLattice& L) {
    if (L.rank() == 0) return L;
    if (L.rank() == L.ambient_dim()) return IntegerLattice::full(L.ambient_dim());
    IntMat K = kernel_basis(L.basis());
    return hnf(kernel_basis(K));
}

RationalLattice RationalLattice::from_rows(const RatMatrix& rows) {
    Int d = rows.denominator();
    IntMat m(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            Rat v = rows.at(i, j) * Rat(d);
            assert(v.get_den() == 1);
            m.at(i, j) = v.get_num();
        }
    RationalLattice out{hnf(m), d};
    Int g = gcd(out.scaled.basis().content(), out.denom);
    if (g > 1) {
        IntMat b = out.scaled.basis();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_divexact(b.at(i, j).get_mpz_t(), b.at(i, j).get_mpz_t(),
                             g.get_mpz_t());
        out.scaled = hnf(b);
        out.denom /= g;
    }
    return out;
}

RationalLattice RationalLattice::from_integer(const IntegerLattice& L) {
    return RationalLattice{L, Int(1)};
}

bool RationalLattice::contains(const std::vector<Rat>& v) const {
    std::vector<Int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat x = v[i] * Rat(denom);
        if (x.get_den() != 1) return false;
        w[i] = x.get_num();
    }
    return scaled.contains(w);
}

RatMatrix RationalLattice::basis() const {
    RatMatrix b = RatMatrix::from_int(scaled.basis());
    return b.scaled(make_rat(1, denom));
}

Int rational_lattice_index(const RationalLattice& sub, const RationalLattice& sup) {
    // compare d*sub and d*sup for the common denominator d
    Int d = lcm(sub.denom, sup.denom);
    auto scale = [&](const RationalLattice& L) {
        Int f = d / L.denom;
        IntMat b = L.scaled.basis();
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) *= f;
        return hnf(b);
    };
    return lattice_index(scale(sub), scale(sup));
}

RationalLattice dual_lattice(const IntegerLattice& L, const RatMatrix& B) {
    const std::size_t r = L.rank(), m = L.ambient_dim();
    RatMatrix basis = RatMatrix::from_int(L.basis());
    RatMatrix gram = basis * B * basis.transpose();
    if (gram.det() == 0) throw degenerate_form("dual_lattice: degenerate form");
    RatMatrix dual = gram.inverse() * basis; // rows span L-dual inside span(L)
    (void)r;
    (void)m;
    return RationalLattice::from_rows(dual);
}

} // namespace torusdisc
