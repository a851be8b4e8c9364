#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohcfg/configuration.hpp"
#include "cohcfg/fusion.hpp"
#include "cohcfg/permgroup.hpp"
#include "cohcfg/tensor.hpp"

namespace cohcfg {

enum class AutMethod { partly_regular_fastpath, individualization_refinement, known_group_confirmed };
std::string to_string(AutMethod m);

struct AutGroup {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  AutMethod method = AutMethod::individualization_refinement;

  GeneratedGroup group(std::size_t degree) const { return GeneratedGroup(degree, generators); }
};

/// Largest degree for the individualization-refinement path.
inline constexpr std::size_t kGenericSearchMaxDegree = 150;

/// aut(X). Partly regular inputs use the regular-point fast path at any
/// degree; otherwise individualization-refinement, guarded by
/// kGenericSearchMaxDegree (ResourceError). Generators of a known subgroup
/// seed the search; when the result has the same order as that subgroup
/// the method is reported as known_group_confirmed.
AutGroup automorphism_group(const CoherentConfiguration& cfg, const std::vector<Permutation>& known = {});

/// A bijection f with dst(f(a), f(b)) == src(a, b) for all cells, color
/// ids compared literally. Throws ResourceError above the generic guard.
std::optional<Permutation> find_isomorphism(const ColorMatrix& src, const ColorMatrix& dst);

/// Largest rank for algebraic-automorphism enumeration.
inline constexpr std::size_t kAlgebraicSearchMaxRank = 10;

/// All algebraic automorphisms of X (tensor-preserving color bijections
/// that keep reflexive colors reflexive). Throws ResourceError above
/// kAlgebraicSearchMaxRank.
std::vector<ColorPermutation> algebraic_automorphisms(const CoherentConfiguration& cfg,
                                                      const IntersectionTensor& tensor);

/// A point bijection inducing `phi`, i.e. r(f(a), f(b)) = phi(r(a, b)).
std::optional<Permutation> inducing_bijection(const CoherentConfiguration& cfg, const ColorPermutation& phi);

}  // namespace cohcfg
