#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmis {

enum class Errc {
  EmptyEdge,
  BadArity,
  NoEdges,
  TooLarge,
  DegenerateParams,
  DimensionGateExhausted,
  InternalInvariant,
  Infeasible,
  Parse,
  Precondition,
  WorkBudget,
};

std::string_view to_string(Errc code);

// Every failure surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hmis
