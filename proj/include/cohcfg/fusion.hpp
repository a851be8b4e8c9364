#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohcfg/configuration.hpp"
#include "cohcfg/tensor.hpp"

namespace cohcfg {

/// A permutation of the colors of a configuration, as an image table.
using ColorPermutation = std::vector<Color>;

struct ColorAction {
  /// Set when every color is mapped onto a color.
  std::optional<ColorPermutation> permutation;
  /// Otherwise a cell whose image leaves the class the others went to.
  std::pair<Point, Point> witness{0, 0};
  std::string reason;
};

/// The permutation of colors induced by a point map, if it is one.
ColorAction induced_color_action(const CoherentConfiguration& cfg, const Permutation& g);

/// Order of a color permutation.
std::uint64_t color_permutation_order(const ColorPermutation& p);

/// Empty if `phi` is an algebraic automorphism (reflexive colors go to
/// reflexive colors and c_{rs}^t = c_{phi r, phi s}^{phi t}); otherwise a
/// description of a violating triple.
std::optional<std::string> algebraic_automorphism_violation(const CoherentConfiguration& cfg,
                                                            const IntersectionTensor& tensor,
                                                            const ColorPermutation& phi);

struct FusionMap {
  /// original color -> fused color (canonical ids of the fused configuration)
  std::vector<Color> fused_color;
  std::vector<ColorPermutation> generators;
  /// |Phi|, the order of the group generated on colors
  std::uint64_t group_order = 1;
  /// orbits of Phi on colors, indexed by fused color
  std::vector<std::vector<Color>> orbits;
};

struct Fusion {
  CoherentConfiguration fused;
  FusionMap map;
};

/// X^Phi for Phi generated by `generators`. Throws UsageError naming the
/// triple if a generator is not an algebraic automorphism, IntegrityError
/// if the fused matrix fails full validation.
Fusion algebraic_fusion(const CoherentConfiguration& cfg, std::span<const ColorPermutation> generators);
Fusion algebraic_fusion(const CoherentConfiguration& cfg, const IntersectionTensor& tensor,
                        std::span<const ColorPermutation> generators);

/// Samples original color triples (r, s, t), t irreflexive, and checks
/// c_{r' s'}^{t'} <= m_t |Phi|^2 in the fused tensor, primes denoting fused
/// colors. Returns one line per violation.
std::vector<std::string> fusion_bound_violations(const CoherentConfiguration& cfg, const IntersectionTensor& tensor,
                                                 const Fusion& fusion,
                                                 const IntersectionTensor& fused_tensor, std::size_t samples,
                                                 std::uint64_t seed);

}  // namespace cohcfg
