#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohcfg/configuration.hpp"
#include "cohcfg/tensor.hpp"

namespace cohcfg {

struct IndistinguishingNumbers {
  /// c(s) for every color; reflexive colors carry c = n by convention.
  std::vector<std::size_t> per_color;
  /// max of c(s) over irreflexive s, 0 if there is none.
  std::size_t overall = 0;
};

/// c(s) = sum_r c_{r r*}^s, cross-checked against a direct count of
/// {g : r(g, a) = r(g, b)} for the representative (a, b) of every color.
IndistinguishingNumbers indistinguishing_number(const CoherentConfiguration& cfg);
/// Same, from an already computed tensor (still cross-checked directly).
IndistinguishingNumbers indistinguishing_number(const CoherentConfiguration& cfg,
                                                const IntersectionTensor& tensor);

struct PseudocyclicResult {
  bool pseudocyclic = false;
  /// the common irreflexive valency k, 0 if valencies differ
  std::size_t valency = 0;
};

/// Throws UsageError on a non-homogeneous configuration.
PseudocyclicResult is_pseudocyclic(const CoherentConfiguration& cfg);

struct PartlyRegularResult {
  bool partly_regular = false;
  std::vector<Point> regular_points;
};

/// Points alpha with |alpha s| <= 1 for all colors s.
PartlyRegularResult partly_regular(const CoherentConfiguration& cfg);
bool is_regular_point(const CoherentConfiguration& cfg, Point alpha);

/// Induced configuration on a union of fibers. Points keep their relative
/// order. Throws UsageError if `points` is not a union of fibers.
CoherentConfiguration restriction(const CoherentConfiguration& cfg, std::span<const Point> points);
CoherentConfiguration restriction_to_fiber(const CoherentConfiguration& cfg, std::uint32_t fiber);

/// Colors s contained in Delta x Gamma with n_s = n_{s*} = 1.
std::vector<Color> find_matchings(const CoherentConfiguration& cfg, std::uint32_t delta,
                                  std::uint32_t gamma);

/// The relation first · second = {(a, b) : (a, g) in first, (g, b) in second}
/// as the sorted list of colors whose union it is.
struct Relation {
  std::vector<Color> colors;
  std::size_t cells = 0;
};
/// Throws UsageError when the target fiber of `first` is not the source
/// fiber of `second`, IntegrityError when the product is not a union of
/// colors or a product with a matching is not a single color.
Relation dot_product(const CoherentConfiguration& cfg, Color first, Color second);

/// m_t = max_{r,s} c_{rs}^t, computed from the representative pair of t.
/// Throws UsageError for reflexive t.
std::uint32_t m_t(const CoherentConfiguration& cfg, Color t);

}  // namespace cohcfg
