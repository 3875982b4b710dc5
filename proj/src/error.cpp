#include "spider/error.hpp"

namespace spider {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooFewLegs: return "TooFewLegs";
        case ErrorCode::NonPositiveLeg: return "NonPositiveLeg";
        case ErrorCode::LegTooShort: return "LegTooShort";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::NotGoodDrawing: return "NotGoodDrawing";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::Internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace spider
