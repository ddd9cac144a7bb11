#include "edgeham/error.hpp"

namespace edgeham {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyHyperedge: return "EmptyHyperedge";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotAHittingSet: return "NotAHittingSet";
    case ErrorCode::InvalidInputPath: return "InvalidInputPath";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotAVertexCover: return "NotAVertexCover";
    case ErrorCode::EdgeNotIncidentToItsType: return "EdgeNotIncidentToItsType";
    case ErrorCode::InvalidKernelCertificate: return "InvalidKernelCertificate";
    case ErrorCode::NoLargeGroup: return "NoLargeGroup";
    case ErrorCode::MergedInstanceTooLarge: return "MergedInstanceTooLarge";
    case ErrorCode::InvalidMergedCertificate: return "InvalidMergedCertificate";
    case ErrorCode::NotAProperComplementColoring: return "NotAProperComplementColoring";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::InvalidNiceDecomposition: return "InvalidNiceDecomposition";
    case ErrorCode::LabelOutOfBudget: return "LabelOutOfBudget";
    case ErrorCode::JoinSameLabel: return "JoinSameLabel";
    case ErrorCode::SetsTooSmall: return "SetsTooSmall";
    case ErrorCode::NotABiclique: return "NotABiclique";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidSolution: return "InvalidSolution";
    case ErrorCode::AugmentationStuck: return "AugmentationStuck";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace edgeham
