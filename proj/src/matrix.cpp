#include "torusdisc/matrix.hpp"

#include "torusdisc/errors.hpp"

#include <cassert>
#include <sstream>

namespace torusdisc {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin() == rows.end() ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        assert(r.size() == cols_);
        for (const auto& x : r) e_.push_back(x);
    }
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMat::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntMat::set_row(std::size_t i, const std::vector<Int>& v) {
    assert(v.size() == cols_);
    std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    assert(cols_ == o.rows_);
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool IntMat::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

Int IntMat::content() const {
    Int g = 0;
    for (const Int& x : e_) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

Int IntMat::det_bareiss() const {
    assert(rows_ == cols_);
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMat a = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // division is exact in Bareiss
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin() == rows.end() ? 0 : rows.begin()->size();
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        assert(r.size() == cols_);
        for (const auto& x : r) e_.push_back(x);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMat& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
    return std::vector<Rat>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void RatMatrix::set_row(std::size_t i, const std::vector<Rat>& v) {
    assert(v.size() == cols_);
    std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    assert(cols_ == o.rows_);
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Rat RatMatrix::trace() const {
    assert(rows_ == cols_);
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

Rat RatMatrix::det() const {
    assert(rows_ == cols_);
    if (rows_ == 0) return Rat(1);
    IntMat m(rows_, cols_);
    Rat scale(1);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int d(1);
        for (std::size_t j = 0; j < cols_; ++j) d = lcm(d, at(i, j).get_den());
        scale /= Rat(d);
        for (std::size_t j = 0; j < cols_; ++j) {
            Rat v = at(i, j) * Rat(d);
            m.at(i, j) = v.get_num();
        }
    }
    return Rat(m.det_bareiss()) * scale;
}

RatMatrix RatMatrix::inverse() const {
    assert(rows_ == cols_);
    std::size_t n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw singular_matrix("matrix not invertible");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::size_t RatMatrix::rank() const {
    RatMatrix m = *this;
    return rref(m).size();
}

std::vector<Rat> RatMatrix::flatten() const { return e_; }

RatMatrix RatMatrix::unflatten(const std::vector<Rat>& v, std::size_t rows,
                               std::size_t cols) {
    assert(v.size() == rows * cols);
    RatMatrix m(rows, cols);
    m.e_ = v;
    return m;
}

Int RatMatrix::denominator() const {
    Int d(1);
    for (const Rat& x : e_) d = lcm(d, x.get_den());
    return d;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << rat_to_string(at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Rat> solve_left(const RatMatrix& A, const std::vector<Rat>& b) {
    // x * A = b  <=>  A^T x^T = b^T
    RatMatrix inv = A.transpose().inverse();
    std::size_t n = A.rows();
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += inv.at(i, j) * b[j];
        x[i] = s;
    }
    return x;
}

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(piv, j), m.at(r, j));
        Rat d = m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) /= d;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace torusdisc
