#ifndef TORUSDISC_MATRIX_HPP
#define TORUSDISC_MATRIX_HPP

#include "torusdisc/numq.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace torusdisc {

// Dense integer matrix, row major.
class IntMat {
  public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Int>& v);
    void swap_rows(std::size_t i, std::size_t j);

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;

    bool is_zero() const;
    // gcd of all entries, 0 for the zero matrix
    Int content() const;

    // Fraction-free Bareiss determinant (square only).
    Int det_bareiss() const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

// Dense rational matrix; every entry canonical (lowest terms, positive
// denominator) by mpq arithmetic.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rat>& v);

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& c) const;
    bool operator==(const RatMatrix& o) const = default;

    Rat trace() const;
    bool is_zero() const;

    // Clears denominators row-wise, then Bareiss.
    Rat det() const;
    // Gauss-Jordan; throws singular_matrix.
    RatMatrix inverse() const;
    std::size_t rank() const;

    // Row-major flattening (carrier for matrices as vectors of Q^(n*m)).
    std::vector<Rat> flatten() const;
    static RatMatrix unflatten(const std::vector<Rat>& v, std::size_t rows,
                               std::size_t cols);

    // lcm of entry denominators
    Int denominator() const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Solve x * A = b for a row vector x (A square invertible).
std::vector<Rat> solve_left(const RatMatrix& A, const std::vector<Rat>& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

} // namespace torusdisc

#endif
