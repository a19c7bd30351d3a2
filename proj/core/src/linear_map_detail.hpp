#pragma once

// Internal: matrices of linear maps between direct sums of Hom spaces.

#include "enhadhm/matrix.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace enhadhm::detail {

struct Shape {
    std::size_t rows;
    std::size_t cols;
};

inline std::size_t total_dim(const std::vector<Shape>& shapes)
{
    std::size_t n = 0;
    for (const Shape& s : shapes)
        n += s.rows * s.cols;
    return n;
}

using Tuple = std::vector<RatMatrix>;
using BlockMap = std::function<Tuple(const Tuple&)>;

/* Matrix of a linear map between direct sums of Hom spaces, columns
 * obtained by evaluating the map on every basis unit. Blocks are laid
 * out in the given order, each vectorized column-major; this ordering
 * is part of the serialization contract. */
inline RatMatrix assemble_linear_map(const std::vector<Shape>& src, const std::vector<Shape>& dst,
                                     const BlockMap& f)
{
    RatMatrix m(total_dim(dst), total_dim(src));
    std::size_t col = 0;
    for (std::size_t k = 0; k < src.size(); ++k) {
        for (std::size_t j = 0; j < src[k].cols; ++j) {
            for (std::size_t i = 0; i < src[k].rows; ++i) {
                Tuple unit;
                unit.reserve(src.size());
                for (const Shape& s : src)
                    unit.emplace_back(s.rows, s.cols);
                unit[k].at(i, j) = 1;

                Tuple out = f(unit);
                if (out.size() != dst.size())
                    throw std::logic_error("block map arity mismatch");
                std::size_t row = 0;
                for (std::size_t t = 0; t < dst.size(); ++t) {
                    if (out[t].rows() != dst[t].rows || out[t].cols() != dst[t].cols)
                        throw std::logic_error("block map shape mismatch");
                    for (std::size_t jj = 0; jj < dst[t].cols; ++jj)
                        for (std::size_t ii = 0; ii < dst[t].rows; ++ii)
                            m.at(row++, col) = out[t].at(ii, jj);
                }
                ++col;
            }
        }
    }
    return m;
}

} // namespace enhadhm::detail
