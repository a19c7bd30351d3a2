#pragma once

#include "enhadhm/matrix.hpp"

#include <optional>

namespace enhadhm {

/* Linear subspace of Q^n, held as a canonical basis so that equality of
 * values coincides with equality of subspaces. The canonical form is the
 * reduced column echelon form (the transpose of the RREF of the
 * transposed generator matrix). */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

    /* Span of the columns of `generators`. */
    static Subspace span_of(const RatMatrix& generators);
    static Subspace full(std::size_t ambient_dim) { return span_of(RatMatrix::identity(ambient_dim)); }
    static Subspace coordinate_span(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const RatMatrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const RatMatrix& column_vector) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_;
    RatMatrix basis_; // ambient_ x dim, canonical
};

Subspace sum_spaces(const Subspace& u, const Subspace& v);
Subspace intersect_spaces(const Subspace& u, const Subspace& v);

/* Image m(u) inside Q^{m.rows()}. */
Subspace image_space(const RatMatrix& m, const Subspace& u);
/* Preimage {x : m x in u} inside Q^{m.cols()}. */
Subspace preimage(const RatMatrix& m, const Subspace& u);

inline Subspace column_space(const RatMatrix& m) { return Subspace::span_of(m); }
inline Subspace kernel(const RatMatrix& m) { return Subspace::span_of(kernel_basis(m)); }

struct AffineSolution {
    RatMatrix particular; // one solution of m x = b, as a column
    Subspace kernel;      // ker(m); the solution set is particular + kernel
};

/* std::nullopt exactly when b is not in the image of m. */
std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatMatrix& b);

} // namespace enhadhm
