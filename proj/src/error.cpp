#include "hmis/error.hpp"

namespace hmis {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyEdge: return "EmptyEdge";
    case Errc::BadArity: return "BadArity";
    case Errc::NoEdges: return "NoEdges";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DegenerateParams: return "DegenerateParams";
    case Errc::DimensionGateExhausted: return "DimensionGateExhausted";
    case Errc::InternalInvariant: return "InternalInvariant";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Parse: return "Parse";
    case Errc::Precondition: return "Precondition";
    case Errc::WorkBudget: return "WorkBudget";
  }
  return "Unknown";
}

}  // namespace hmis
