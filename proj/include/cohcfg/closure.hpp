#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohcfg/configuration.hpp"

namespace cohcfg {

/// Working state of the refinement: provisional color ids on Omega x Omega.
struct ColorPartition {
  std::size_t n = 0;
  std::vector<Color> cells;
  bool stable = false;

  ColorPartition() = default;
  ColorPartition(std::size_t degree, std::vector<Color> values);
  explicit ColorPartition(const ColorMatrix& m) : ColorPartition(m.n, m.cells) {}
};

/// Result of one stabilization. Ids are assigned from isomorphism-invariant
/// data only, so isomorphic inputs (with matching initial ids) produce ids
/// that correspond under the isomorphism, and equal fingerprints.
struct Refinement {
  std::vector<Color> cells;
  std::size_t classes = 0;
  std::uint64_t fingerprint = 0;
  std::size_t rounds = 0;
};

/// Two-dimensional Weisfeiler-Leman stabilization of `initial`.
Refinement refine(std::size_t n, std::span<const Color> initial);

/// WL(T): the coarsest coherent configuration refining the partition.
CoherentConfiguration coherent_closure(const ColorPartition& initial);
CoherentConfiguration coherent_closure(const ColorMatrix& initial);

/// WL(S(cfg) ∪ {1_a : a in points}). Throws UsageError for repeated or
/// out-of-range points.
CoherentConfiguration extend_points(const CoherentConfiguration& cfg, std::span<const Point> points);
inline CoherentConfiguration extend_points(const CoherentConfiguration& cfg, std::initializer_list<Point> points) {
  return extend_points(cfg, std::span<const Point>(points.begin(), points.size()));
}

/// Largest degree accepted by two_extension.
inline constexpr std::size_t kTwoExtensionMaxDegree = 30;

/// Closure of the Cartesian square on Omega^2 with diag(Omega^2) split off.
/// The point (a1, a2) has index a1 * n + a2. Throws ResourceError above
/// kTwoExtensionMaxDegree.
CoherentConfiguration two_extension(const CoherentConfiguration& cfg);

}  // namespace cohcfg
