#pragma once

#include <stdexcept>
#include <string>

namespace enhadhm {

enum class Errc {
    malformed_rational,
    shape_mismatch,
    missing_field,
    bad_json,
    bad_dims,
    singular_gauge,
    outside_chamber,
    not_representation,
    cprime_required,
    vandermonde_hypothesis,
    quotient_undefined,
    noncommuting_pair,
    oracle_budget,
    unstable_input,
};

const char* errc_name(Errc c);

/* Single exception type for all contract violations; code() distinguishes
 * the failure class so callers (and the CLI) can map errors without parsing
 * messages. */
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace enhadhm
