#include "enhadhm/complex.hpp"

#include "enhadhm/errors.hpp"
#include "json_detail.hpp"

#include <stdexcept>

namespace enhadhm {

ChainComplex::ChainComplex(std::vector<std::size_t> degree_dims,
                           std::vector<RatMatrix> differentials, bool check_dd)
    : dims_(std::move(degree_dims)), diffs_(std::move(differentials))
{
    if (dims_.empty())
        fail(Errc::bad_dims, "complex needs at least one term");
    if (diffs_.size() + 1 != dims_.size())
        fail(Errc::shape_mismatch, "complex needs one differential per consecutive pair of terms");
    for (std::size_t i = 0; i < diffs_.size(); ++i)
        if (diffs_[i].cols() != dims_[i] || diffs_[i].rows() != dims_[i + 1])
            fail(Errc::shape_mismatch, "differential shape does not match graded dimensions");
    if (check_dd)
        for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
            if (!(diffs_[i + 1] * diffs_[i]).is_zero())
                throw std::logic_error("d.d != 0 at degree " + std::to_string(i));
}

RatMatrix ChainComplex::differential(std::size_t i) const
{
    if (i < diffs_.size())
        return diffs_[i];
    return RatMatrix(0, dim_at(i));
}

long long ChainComplex::euler() const
{
    long long chi = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(dims_[i]);
    return chi;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b)
{
    std::size_t len = std::max(a.length(), b.length());
    std::vector<std::size_t> dims(len);
    for (std::size_t i = 0; i < len; ++i)
        dims[i] = a.dim_at(i) + b.dim_at(i);

    std::vector<RatMatrix> diffs;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        RatMatrix d(dims[i + 1], dims[i]);
        RatMatrix da = i + 1 < a.length() ? a.differential(i) : RatMatrix(0, a.dim_at(i));
        RatMatrix db = i + 1 < b.length() ? b.differential(i) : RatMatrix(0, b.dim_at(i));
        d.set_block(0, 0, da);
        d.set_block(a.dim_at(i + 1), a.dim_at(i), db);
        diffs.push_back(std::move(d));
    }
    return ChainComplex(std::move(dims), std::move(diffs), false);
}

CohomologyReport cohomology(const ChainComplex& complex)
{
    CohomologyReport report;
    report.euler = complex.euler();
    std::size_t len = complex.length();
    std::vector<std::size_t> ranks(len, 0); // ranks[i] = rank d_i, with rank d_{len-1} = 0
    for (std::size_t i = 0; i + 1 < len; ++i)
        ranks[i] = rank(complex.differential(i));
    report.h.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t ker_dim = complex.degree_dims()[i] - (i + 1 < len ? ranks[i] : 0);
        std::size_t prev_rank = i == 0 ? 0 : ranks[i - 1];
        report.h[i] = ker_dim - prev_rank;
    }
    return report;
}

std::string to_json(const CohomologyReport& report, bool pretty)
{
    detail::json j{{"h", report.h}, {"euler", report.euler}};
    return pretty ? j.dump(2) : j.dump();
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<RatMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    if (components_.size() != source_.length())
        fail(Errc::shape_mismatch, "chain map needs one component per source degree");
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].rows() != target_.dim_at(i) || components_[i].cols() != source_.dim_at(i))
            fail(Errc::shape_mismatch, "chain map component shape mismatch");
    for (std::size_t i = 0; i + 1 < components_.size(); ++i) {
        RatMatrix lhs = target_.differential(i) * components_[i];
        RatMatrix rhs = components_[i + 1] * source_.differential(i);
        if (!(lhs == rhs))
            throw std::logic_error("chain map does not commute with differentials at degree "
                                   + std::to_string(i));
    }
}

} // namespace enhadhm
