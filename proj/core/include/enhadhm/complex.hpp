#pragma once

#include "enhadhm/matrix.hpp"

#include <string>
#include <vector>

namespace enhadhm {

/* Finite sequence of composable matrices d_0, ..., d_{k-2} between terms
 * of the listed dimensions. Construction verifies the shapes and, when
 * requested, that consecutive differentials compose to zero. */
class ChainComplex {
public:
    ChainComplex(std::vector<std::size_t> degree_dims, std::vector<RatMatrix> differentials,
                 bool check_dd = true);

    std::size_t length() const { return dims_.size(); }
    const std::vector<std::size_t>& degree_dims() const { return dims_; }
    std::size_t dim_at(std::size_t i) const { return i < dims_.size() ? dims_[i] : 0; }

    /* d_i : term_i -> term_{i+1}; the map out of the top term is the zero
     * map onto a zero-dimensional space. */
    RatMatrix differential(std::size_t i) const;

    long long euler() const; // sum_i (-1)^i dim term_i

private:
    std::vector<std::size_t> dims_;
    std::vector<RatMatrix> diffs_;
};

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

struct CohomologyReport {
    std::vector<std::size_t> h; // dim H^i for each term
    long long euler = 0;
};

/* h[i] = dim ker d_i - rank d_{i-1}, exact. */
CohomologyReport cohomology(const ChainComplex& complex);

std::string to_json(const CohomologyReport& report, bool pretty = false);

/* Chain map between complexes: one component per degree of the source,
 * commuting with the differentials (verified at construction). */
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::vector<RatMatrix> components);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    const RatMatrix& component(std::size_t i) const { return components_[i]; }

private:
    ChainComplex source_;
    ChainComplex target_;
    std::vector<RatMatrix> components_;
};

} // namespace enhadhm
