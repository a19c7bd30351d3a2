#include "enhadhm/rational.hpp"

#include "enhadhm/errors.hpp"

#include <cctype>

namespace enhadhm {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::malformed_rational: return "malformed-rational";
    case Errc::shape_mismatch: return "shape-mismatch";
    case Errc::missing_field: return "missing-field";
    case Errc::bad_json: return "bad-json";
    case Errc::bad_dims: return "bad-dims";
    case Errc::singular_gauge: return "singular-gauge";
    case Errc::outside_chamber: return "outside-chamber";
    case Errc::not_representation: return "not-representation";
    case Errc::cprime_required: return "cprime-required";
    case Errc::vandermonde_hypothesis: return "vandermonde-hypothesis";
    case Errc::quotient_undefined: return "quotient-undefined";
    case Errc::noncommuting_pair: return "noncommuting-pair";
    case Errc::oracle_budget: return "oracle-budget";
    case Errc::unstable_input: return "unstable-input";
    }
    return "unknown";
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to)
{
    if (from >= to)
        return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const auto bad = [&]() -> Rational {
        fail(Errc::malformed_rational, "malformed rational '" + text + "'");
    };

    std::size_t slash = text.find('/');
    std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den_part = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);

    std::size_t num_start = 0;
    if (!num_part.empty() && num_part[0] == '-')
        num_start = 1;
    if (!all_digits(num_part, num_start, num_part.size()))
        return bad();
    if (!all_digits(den_part, 0, den_part.size()))
        return bad();

    BigInt num(num_part);
    BigInt den(den_part);
    if (den == 0)
        return bad();

    Rational value(num);
    value /= Rational(den);
    return value;
}

std::string format_rational(const Rational& value)
{
    return value.str();
}

std::size_t rational_bit_length(const Rational& value)
{
    using boost::multiprecision::abs;
    using boost::multiprecision::msb;
    const auto bits = [](const BigInt& n) -> std::size_t {
        if (n == 0)
            return 0;
        return static_cast<std::size_t>(msb(abs(n))) + 1;
    };
    return bits(numerator(value)) + bits(denominator(value));
}

} // namespace enhadhm
