#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohcfg/permgroup.hpp"

namespace cohcfg {

using Color = std::uint32_t;

/// A raw n x n matrix of color ids, row-major. No axioms assumed.
struct ColorMatrix {
  std::size_t n = 0;
  std::vector<Color> cells;

  ColorMatrix() = default;
  ColorMatrix(std::size_t degree, std::vector<Color> values);
  Color at(Point a, Point b) const { return cells[static_cast<std::size_t>(a) * n + b]; }
  Color& at(Point a, Point b) { return cells[static_cast<std::size_t>(a) * n + b]; }
  /// Number of distinct ids after compaction; ids need not be contiguous.
  std::size_t count_classes() const;
  bool operator==(const ColorMatrix&) const = default;
};

/// Relabel classes so that ids are 0..r-1 ordered by (reflexive classes
/// first, then |class| / |source fiber| ascending, then least cell in
/// row-major order). The result depends only on the partition.
ColorMatrix canonical_relabel(const ColorMatrix& m);

/// True iff both matrices induce the same partition of the cell set.
bool same_partition(const ColorMatrix& a, const ColorMatrix& b);

/// Reasons a matrix fails the rainbow axioms, empty if it is a rainbow.
std::vector<std::string> rainbow_violations(const ColorMatrix& m);

/// A coherent configuration (or at least a rainbow: construction checks the
/// axioms, coherence is checked by `validate(..., ValidationLevel::full)`).
/// Color ids are always canonical, so two instances are equal iff their
/// partitions are equal.
class CoherentConfiguration {
 public:
  CoherentConfiguration() = default;
  /// Throws FormatError if the matrix is not a rainbow.
  explicit CoherentConfiguration(const ColorMatrix& m);

  std::size_t degree() const { return matrix_.n; }
  std::size_t rank() const { return rank_; }
  Color color(Point a, Point b) const { return matrix_.at(a, b); }
  const ColorMatrix& matrix() const { return matrix_; }
  const Color* row(Point a) const { return matrix_.cells.data() + static_cast<std::size_t>(a) * degree(); }

  const std::vector<std::vector<Point>>& fibers() const { return fibers_; }
  std::uint32_t fiber_of(Point a) const { return fiber_of_point_[a]; }
  std::uint32_t source_fiber(Color s) const { return source_[s]; }
  std::uint32_t target_fiber(Color s) const { return target_[s]; }
  Color transpose(Color s) const { return transpose_[s]; }
  /// |alpha s| for alpha in the source fiber (|s| / |source fiber|).
  std::size_t valency(Color s) const { return valency_[s]; }
  std::size_t size(Color s) const { return size_[s]; }
  bool is_reflexive(Color s) const { return reflexive_[s]; }
  /// Least cell of the class in row-major order.
  std::pair<Point, Point> representative(Color s) const { return rep_[s]; }
  /// The reflexive color 1_Delta of fiber `f`.
  Color fiber_color(std::uint32_t f) const { return color(fibers_[f][0], fibers_[f][0]); }

  bool is_homogeneous() const { return fibers_.size() == 1; }
  bool is_symmetric() const;
  /// Whether every class is a singleton (the discrete configuration).
  bool is_discrete() const { return rank_ == degree() * degree(); }
  /// Homogeneous of rank <= 2.
  bool is_trivial() const { return is_homogeneous() && rank_ <= 2; }
  bool is_semiregular() const;

  /// Cells of one color.
  std::vector<std::pair<Point, Point>> cells_of(Color s) const;
  /// s^f == s for every color.
  bool is_automorphism(const Permutation& f) const;

  bool operator==(const CoherentConfiguration& o) const { return matrix_ == o.matrix_; }

 private:
  ColorMatrix matrix_;
  std::size_t rank_ = 0;
  std::vector<std::vector<Point>> fibers_;
  std::vector<std::uint32_t> fiber_of_point_;
  std::vector<std::uint32_t> source_, target_;
  std::vector<Color> transpose_;
  std::vector<std::size_t> valency_, size_;
  std::vector<bool> reflexive_;
  std::vector<std::pair<Point, Point>> rep_;
};

/// Discrete configuration: every cell its own color.
CoherentConfiguration discrete_configuration(std::size_t n);
/// Trivial scheme: diagonal and (for n > 1) its complement.
CoherentConfiguration trivial_configuration(std::size_t n);

}  // namespace cohcfg
