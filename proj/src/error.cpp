#include "ehrlatt/error.hpp"

namespace ehrlatt {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::SingularSystem: return "singular-system";
        case ErrorKind::DegenerateNormal: return "degenerate-normal";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Empty: return "empty";
        case ErrorKind::LowerDimensional: return "lower-dimensional";
        case ErrorKind::DegenerateDilate: return "degenerate-dilate";
        case ErrorKind::InsufficientSeries: return "insufficient-series";
        case ErrorKind::NotAFacet: return "not-a-facet";
        case ErrorKind::InternalConsistency: return "internal-consistency";
        case ErrorKind::UnboundedDual: return "unbounded-dual";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

}  // namespace ehrlatt
