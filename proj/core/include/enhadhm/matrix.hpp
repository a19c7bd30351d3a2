#pragma once

#include "enhadhm/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace enhadhm {

/* Dense matrix of exact rationals, row-major. Degenerate shapes (0 rows
 * and/or 0 columns) are valid and arise naturally, e.g. for Hom(V', V)
 * with dim V' = 0. Values are immutable in spirit: every operation
 * returns a fresh matrix. */
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
    static RatMatrix diagonal(const std::vector<Rational>& values);
    static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
    static RatMatrix column(const std::vector<Rational>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    RatMatrix operator-() const;

    /* Copy of the block of size (nrows x ncols) whose top-left corner is (i0, j0). */
    RatMatrix block(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t i0, std::size_t j0, const RatMatrix& value);
    RatMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

/* Reduced row echelon form. Pivots are chosen among the nonzero
 * candidates of the current column by smallest bit length, which keeps
 * intermediate coefficients small; the resulting RREF is canonical
 * regardless of that choice. */
struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/* Columns form a basis of ker(m); dimension cols - rank. */
RatMatrix kernel_basis(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/* JSON encoding {"rows": m, "cols": n, "entries": [["p/q", ...], ...]},
 * shared by every serialized object in the library. */
std::string matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const std::string& text);

} // namespace enhadhm
