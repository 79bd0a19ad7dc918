#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hmis/hypergraph.hpp"

namespace hmis {

enum class GenKind { UniformD, MixedDims, Linear };

std::string_view to_string(GenKind k);
/// Accepts "uniform-d", "mixed-dims", "linear"; throws Precondition otherwise.
GenKind parse_gen_kind(std::string_view s);

struct GenSpec {
  std::size_t n = 0;
  GenKind kind = GenKind::UniformD;
  /// Exactly one of m and edge_prob must be set. edge_prob includes every
  /// candidate subset independently and is not supported for linear.
  std::optional<std::size_t> m;
  std::optional<double> edge_prob;
  std::size_t dim_min = 3;
  std::size_t dim_max = 3;
  std::uint64_t seed = 0;
};

/// Random instance per spec; always normalized and a pure function of spec.
/// mixed-dims never places two comparable edges and linear never places two
/// edges sharing a pair, so exactly m edges survive normalization. Throws
/// Infeasible when m edges cannot be placed within a bounded number of draws.
Hypergraph gen(const GenSpec& spec);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace hmis
