#include "hcyl/error.hpp"

namespace hcyl {

const char* code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::rank_mismatch: return "rank_mismatch";
    case ErrorCode::cap_mismatch: return "cap_mismatch";
    case ErrorCode::weight_mismatch: return "weight_mismatch";
    case ErrorCode::infinite_weight: return "infinite_weight";
    case ErrorCode::exceeds_cap: return "exceeds_cap";
    case ErrorCode::not_in_kernel: return "not_in_kernel";
    case ErrorCode::not_lie: return "not_lie";
    case ErrorCode::not_integral: return "not_integral";
    case ErrorCode::malformed: return "malformed";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::bounds: return "bounds";
    }
    return "unknown";
}

} // namespace hcyl
