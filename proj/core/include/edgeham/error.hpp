#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgeham {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyHyperedge,
  NotAPermutation,
  NotAHittingSet,
  InvalidInputPath,
  InfeasibleSpec,
  InstanceTooLarge,
  TooFewEdges,
  SearchBudgetExceeded,
  SameVertex,
  NotAVertexCover,
  EdgeNotIncidentToItsType,
  InvalidKernelCertificate,
  NoLargeGroup,
  MergedInstanceTooLarge,
  InvalidMergedCertificate,
  NotAProperComplementColoring,
  InvalidConfig,
  InvalidDecomposition,
  InvalidNiceDecomposition,
  LabelOutOfBudget,
  JoinSameLabel,
  SetsTooSmall,
  NotABiclique,
  PreconditionViolated,
  InvalidSolution,
  AugmentationStuck,
  GenerationFailed,
  SyntaxError,
  CountMismatch,
};

std::string_view to_string(ErrorCode code);

/// Exception carried by every failing operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace edgeham
