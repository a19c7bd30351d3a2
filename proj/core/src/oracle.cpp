#include "enhadhm/oracle.hpp"

#include "enhadhm/errors.hpp"

namespace enhadhm {

namespace {

constexpr std::size_t kMaxDim = 4;

void require_budget(unsigned p, std::size_t n)
{
    if ((p != 2 && p != 3) || n > kMaxDim)
        fail(Errc::oracle_budget, "oracle budget exceeded (needs modulus in {2,3} and dim <= 4)");
}

unsigned fp_inverse(unsigned value, unsigned p)
{
    for (unsigned candidate = 1; candidate < p; ++candidate)
        if (candidate * value % p == 1)
            return candidate;
    fail(Errc::oracle_budget, "no inverse mod p");
}

} // namespace

FpMatrix FpMatrix::identity(unsigned p, std::size_t n)
{
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

FpMatrix fp_mul(const FpMatrix& a, const FpMatrix& b)
{
    if (a.cols != b.rows || a.modulus != b.modulus)
        fail(Errc::shape_mismatch, "shape/modulus mismatch in product");
    FpMatrix m(a.modulus, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k)
            for (std::size_t j = 0; j < b.cols; ++j)
                m.at(i, j) = (m.at(i, j) + a.at(i, k) * b.at(k, j)) % a.modulus;
    return m;
}

FpMatrix fp_hstack(const FpMatrix& a, const FpMatrix& b)
{
    if (a.rows != b.rows || a.modulus != b.modulus)
        fail(Errc::shape_mismatch, "shape/modulus mismatch in hstack");
    FpMatrix m(a.modulus, a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j)
            m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j)
            m.at(i, a.cols + j) = b.at(i, j);
    }
    return m;
}

std::size_t fp_rank(const FpMatrix& input)
{
    FpMatrix m = input;
    unsigned p = m.modulus;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pivot = m.rows;
        for (std::size_t i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot == m.rows)
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(row, j), m.at(pivot, j));
        unsigned inv = fp_inverse(m.at(row, col), p);
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(row, j) = m.at(row, j) * inv % p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            unsigned factor = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + (p - factor) * m.at(row, j)) % p;
        }
        ++row;
    }
    return row;
}

namespace {

bool fp_subspace_contains(const FpMatrix& space, const FpMatrix& vectors)
{
    return fp_rank(fp_hstack(space, vectors)) == fp_rank(space);
}

bool fp_invariant(const FpMatrix& op, const FpMatrix& space)
{
    return fp_subspace_contains(space, fp_mul(op, space));
}

} // namespace

std::vector<FpMatrix> enumerate_subspaces(unsigned p, std::size_t n)
{
    require_budget(p, n);
    std::vector<FpMatrix> result;

    // Every subspace has a unique reduced-echelon basis: pick the pivot
    // rows, then run through all assignments of the free entries.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                pivots.push_back(i);
        std::size_t k = pivots.size();

        // Free slots: (row, basis column) with row not a pivot row and
        // row strictly below that column's pivot row.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t col = 0; col < k; ++col)
            for (std::size_t row = pivots[col] + 1; row < n; ++row) {
                bool is_pivot_row = false;
                for (std::size_t other : pivots)
                    if (other == row)
                        is_pivot_row = true;
                if (!is_pivot_row)
                    slots.emplace_back(row, col);
            }

        std::size_t assignments = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
            assignments *= p;

        for (std::size_t code = 0; code < assignments; ++code) {
            FpMatrix basis(p, n, k);
            for (std::size_t col = 0; col < k; ++col)
                basis.at(pivots[col], col) = 1;
            std::size_t rest = code;
            for (const auto& [row, col] : slots) {
                basis.at(row, col) = static_cast<unsigned>(rest % p);
                rest /= p;
            }
            result.push_back(std::move(basis));
        }
    }
    return result;
}

std::vector<FpMatrix> enumerate_invariant_subspaces(const FpMatrix& a, const FpMatrix& b,
                                                    const FpMatrix& contains)
{
    if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows || contains.rows != a.rows)
        fail(Errc::shape_mismatch, "operators must be square and match the seed ambient");
    require_budget(a.modulus, a.rows);
    if (b.modulus != a.modulus || contains.modulus != a.modulus)
        fail(Errc::shape_mismatch, "modulus mismatch");

    std::vector<FpMatrix> result;
    for (FpMatrix& space : enumerate_subspaces(a.modulus, a.rows))
        if (fp_subspace_contains(space, contains) && fp_invariant(a, space)
            && fp_invariant(b, space))
            result.push_back(std::move(space));
    return result;
}

bool oracle_is_stable(const FpMatrix& a, const FpMatrix& b, const FpMatrix& i)
{
    for (const FpMatrix& space : enumerate_invariant_subspaces(a, b, i))
        if (fp_rank(space) < a.rows)
            return false;
    return true;
}

FpMatrix fp_krylov_closure(const FpMatrix& a, const FpMatrix& b, const FpMatrix& seed)
{
    FpMatrix space = seed;
    for (;;) {
        FpMatrix next = fp_hstack(space, fp_mul(a, space));
        next = fp_hstack(next, fp_mul(b, next));
        if (fp_rank(next) == fp_rank(space))
            return space;
        space = std::move(next);
    }
}

bool fp_krylov_stable(const FpMatrix& a, const FpMatrix& b, const FpMatrix& i)
{
    return fp_rank(fp_krylov_closure(a, b, i)) == a.rows;
}

} // namespace enhadhm
