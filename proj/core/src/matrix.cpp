#include "enhadhm/matrix.hpp"

#include "enhadhm/errors.hpp"
#include "json_detail.hpp"

namespace enhadhm {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& values)
{
    RatMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m.at(i, i) = values[i];
    return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            fail(Errc::shape_mismatch, "ragged initializer for matrix");
        std::size_t j = 0;
        for (long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::column(const std::vector<Rational>& values)
{
    RatMatrix m(values.size(), 1);
    for (std::size_t i = 0; i < values.size(); ++i)
        m.at(i, 0) = values[i];
    return m;
}

bool RatMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (e != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator-() const
{
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(i, j) = -at(i, j);
    return m;
}

RatMatrix RatMatrix::block(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const
{
    if (i0 + nrows > rows_ || j0 + ncols > cols_)
        fail(Errc::shape_mismatch, "block out of range");
    RatMatrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

void RatMatrix::set_block(std::size_t i0, std::size_t j0, const RatMatrix& value)
{
    if (i0 + value.rows() > rows_ || j0 + value.cols() > cols_)
        fail(Errc::shape_mismatch, "block out of range");
    for (std::size_t i = 0; i < value.rows(); ++i)
        for (std::size_t j = 0; j < value.cols(); ++j)
            at(i0 + i, j0 + j) = value.at(i, j);
}

namespace {

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::shape_mismatch, std::string("shape mismatch in ") + op);
}

} // namespace

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    require_same_shape(a, b, "matrix addition");
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    require_same_shape(a, b, "matrix subtraction");
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows())
        fail(Errc::shape_mismatch, "shape mismatch in matrix product");
    RatMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0)
                    continue;
                m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return m;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a)
{
    RatMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = s * a.at(i, j);
    return m;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows())
        fail(Errc::shape_mismatch, "shape mismatch in hstack");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.cols())
        fail(Errc::shape_mismatch, "shape mismatch in vstack");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

RrefResult rref(const RatMatrix& m)
{
    RatMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;

    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        // smallest-bit-length nonzero candidate
        std::size_t best = r.rows();
        std::size_t best_bits = 0;
        for (std::size_t i = row; i < r.rows(); ++i) {
            if (r.at(i, col) == 0)
                continue;
            std::size_t bits = rational_bit_length(r.at(i, col));
            if (best == r.rows() || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == r.rows())
            continue;

        if (best != row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(row, j), r.at(best, j));

        Rational pivot = r.at(row, col);
        for (std::size_t j = col; j < r.cols(); ++j)
            r.at(row, j) /= pivot;

        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col) == 0)
                continue;
            Rational factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(row, j);
        }

        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m)
{
    return rref(m).pivot_cols.size();
}

RatMatrix kernel_basis(const RatMatrix& m)
{
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivot_cols)
        is_pivot[p] = true;

    std::size_t dim = m.cols() - rr.pivot_cols.size();
    RatMatrix basis(m.cols(), dim);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col])
            continue;
        basis.at(free_col, out) = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            basis.at(rr.pivot_cols[i], out) = -rr.reduced.at(i, free_col);
        ++out;
    }
    return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        fail(Errc::shape_mismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    RrefResult rr = rref(hstack(m, RatMatrix::identity(n)));
    if (rr.pivot_cols.size() < n || (n > 0 && rr.pivot_cols[n - 1] >= n))
        return std::nullopt;
    return rr.reduced.block(0, n, n, n);
}

std::string matrix_to_json(const RatMatrix& m)
{
    return detail::matrix_to_json_obj(m).dump();
}

RatMatrix matrix_from_json(const std::string& text)
{
    return detail::matrix_from_json_obj(detail::parse_json(text));
}

} // namespace enhadhm
