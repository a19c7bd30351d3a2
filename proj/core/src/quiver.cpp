#include "enhadhm/quiver.hpp"

#include "enhadhm/errors.hpp"
#include "json_detail.hpp"

namespace enhadhm {

void DimVector::validate() const
{
    if (r < 1 || c < 1)
        fail(Errc::bad_dims, "dimension vector requires r >= 1 and c >= 1");
}

EnhancedRep EnhancedRep::zero(DimVector dims)
{
    dims.validate();
    EnhancedRep x;
    x.dims = dims;
    x.A = RatMatrix(dims.c, dims.c);
    x.B = RatMatrix(dims.c, dims.c);
    x.I = RatMatrix(dims.c, dims.r);
    x.J = RatMatrix(dims.r, dims.c);
    x.Aprime = RatMatrix(dims.cprime, dims.cprime);
    x.Bprime = RatMatrix(dims.cprime, dims.cprime);
    x.F = RatMatrix(dims.c, dims.cprime);
    return x;
}

namespace {

void require_shape(const RatMatrix& m, std::size_t rows, std::size_t cols, const char* name)
{
    if (m.rows() != rows || m.cols() != cols)
        fail(Errc::shape_mismatch,
             std::string("shape mismatch: ") + name + " must be " + std::to_string(rows) + "x"
                 + std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x"
                 + std::to_string(m.cols()));
}

} // namespace

void EnhancedRep::validate_shapes() const
{
    dims.validate();
    require_shape(A, dims.c, dims.c, "A");
    require_shape(B, dims.c, dims.c, "B");
    require_shape(I, dims.c, dims.r, "I");
    require_shape(J, dims.r, dims.c, "J");
    require_shape(Aprime, dims.cprime, dims.cprime, "Aprime");
    require_shape(Bprime, dims.cprime, dims.cprime, "Bprime");
    require_shape(F, dims.c, dims.cprime, "F");
}

AdhmRep AdhmRep::zero(std::size_t r, std::size_t c)
{
    AdhmRep a;
    a.r = r;
    a.c = c;
    a.A = RatMatrix(c, c);
    a.B = RatMatrix(c, c);
    a.I = RatMatrix(c, r);
    a.J = RatMatrix(r, c);
    return a;
}

void AdhmRep::validate_shapes() const
{
    if (r < 1)
        fail(Errc::bad_dims, "ADHM datum requires r >= 1");
    require_shape(A, c, c, "A");
    require_shape(B, c, c, "B");
    require_shape(I, c, r, "I");
    require_shape(J, r, c, "J");
}

RatMatrix AdhmRep::equation_residual() const
{
    return commutator(A, B) + I * J;
}

bool RelationResidual::all_zero() const
{
    return r1.is_zero() && r2.is_zero() && r3.is_zero() && r4.is_zero() && r5.is_zero();
}

RelationResidual relation_residuals(const EnhancedRep& x)
{
    x.validate_shapes();
    RelationResidual res;
    res.r1 = commutator(x.A, x.B) + x.I * x.J;
    res.r2 = x.A * x.F - x.F * x.Aprime;
    res.r3 = x.B * x.F - x.F * x.Bprime;
    res.r4 = x.J * x.F;
    res.r5 = commutator(x.Aprime, x.Bprime);
    return res;
}

bool satisfies_relations(const EnhancedRep& x)
{
    return relation_residuals(x).all_zero();
}

EnhancedRep gauge_transform(const EnhancedRep& x, const RatMatrix& h, const RatMatrix& hprime)
{
    x.validate_shapes();
    require_shape(h, x.dims.c, x.dims.c, "h");
    require_shape(hprime, x.dims.cprime, x.dims.cprime, "hprime");

    auto hinv = inverse(h);
    auto hpinv = inverse(hprime);
    if (!hinv || !hpinv)
        fail(Errc::singular_gauge, "not a gauge transformation: singular h or hprime");

    EnhancedRep y;
    y.dims = x.dims;
    y.A = h * x.A * *hinv;
    y.B = h * x.B * *hinv;
    y.I = h * x.I;
    y.J = x.J * *hinv;
    y.Aprime = hprime * x.Aprime * *hpinv;
    y.Bprime = hprime * x.Bprime * *hpinv;
    y.F = h * x.F * *hpinv;
    return y;
}

AdhmRep adhm_part(const EnhancedRep& x)
{
    AdhmRep a;
    a.r = x.dims.r;
    a.c = x.dims.c;
    a.A = x.A;
    a.B = x.B;
    a.I = x.I;
    a.J = x.J;
    return a;
}

EnhancedRep embed_adhm(const AdhmRep& a)
{
    a.validate_shapes();
    EnhancedRep x = EnhancedRep::zero({a.r, a.c, 0});
    x.A = a.A;
    x.B = a.B;
    x.I = a.I;
    x.J = a.J;
    return x;
}

namespace {

using detail::json;

json rep_to_json_obj(const EnhancedRep& x)
{
    return json{
        {"dims", json{{"r", x.dims.r}, {"c", x.dims.c}, {"cprime", x.dims.cprime}}},
        {"A", detail::matrix_to_json_obj(x.A)},
        {"B", detail::matrix_to_json_obj(x.B)},
        {"I", detail::matrix_to_json_obj(x.I)},
        {"J", detail::matrix_to_json_obj(x.J)},
        {"Aprime", detail::matrix_to_json_obj(x.Aprime)},
        {"Bprime", detail::matrix_to_json_obj(x.Bprime)},
        {"F", detail::matrix_to_json_obj(x.F)},
    };
}

} // namespace

std::string to_json(const EnhancedRep& x, bool pretty)
{
    json j = rep_to_json_obj(x);
    return pretty ? j.dump(2) : j.dump();
}

EnhancedRep rep_from_json(const std::string& text)
{
    json j = detail::parse_json(text);
    const json& dims = detail::get_field(j, "dims");
    EnhancedRep x;
    x.dims.r = detail::get_count(dims, "r");
    x.dims.c = detail::get_count(dims, "c");
    x.dims.cprime = detail::get_count(dims, "cprime");
    x.A = detail::matrix_from_json_obj(detail::get_field(j, "A"));
    x.B = detail::matrix_from_json_obj(detail::get_field(j, "B"));
    x.I = detail::matrix_from_json_obj(detail::get_field(j, "I"));
    x.J = detail::matrix_from_json_obj(detail::get_field(j, "J"));
    x.Aprime = detail::matrix_from_json_obj(detail::get_field(j, "Aprime"));
    x.Bprime = detail::matrix_from_json_obj(detail::get_field(j, "Bprime"));
    x.F = detail::matrix_from_json_obj(detail::get_field(j, "F"));
    x.validate_shapes();
    return x;
}

std::string to_json(const AdhmRep& a, bool pretty)
{
    json j{
        {"r", a.r},
        {"c", a.c},
        {"A", detail::matrix_to_json_obj(a.A)},
        {"B", detail::matrix_to_json_obj(a.B)},
        {"I", detail::matrix_to_json_obj(a.I)},
        {"J", detail::matrix_to_json_obj(a.J)},
    };
    return pretty ? j.dump(2) : j.dump();
}

AdhmRep adhm_from_json(const std::string& text)
{
    json j = detail::parse_json(text);
    AdhmRep a;
    a.r = detail::get_count(j, "r");
    a.c = detail::get_count(j, "c");
    a.A = detail::matrix_from_json_obj(detail::get_field(j, "A"));
    a.B = detail::matrix_from_json_obj(detail::get_field(j, "B"));
    a.I = detail::matrix_from_json_obj(detail::get_field(j, "I"));
    a.J = detail::matrix_from_json_obj(detail::get_field(j, "J"));
    a.validate_shapes();
    return a;
}

} // namespace enhadhm
