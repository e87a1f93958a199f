#pragma once

#include <stdexcept>
#include <string>

namespace hcyl {

/// Machine-readable failure categories. The CLI prints these names verbatim.
enum class ErrorCode {
    syntax,
    out_of_range,
    rank_mismatch,
    cap_mismatch,
    weight_mismatch,
    infinite_weight,
    exceeds_cap,
    not_in_kernel,
    not_lie,
    not_integral,
    malformed,
    precondition,
    bounds,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hcyl
