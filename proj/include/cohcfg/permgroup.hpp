#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cohcfg {

using Point = std::uint32_t;

/// A permutation of 0..n-1 stored as its image table.
class Permutation {
 public:
  Permutation() = default;
  /// Throws UsageError unless `images` is a bijection on 0..n-1.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  /// Apply *this first, then `next`: x -> next(this(x)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;
  /// Cycle lengths, sorted ascending (fixed points included as 1s).
  std::vector<std::size_t> cycle_type() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// A permutation group given by generators, with a Schreier-Sims
/// stabilizer chain built at construction.
///
/// The base begins with `base_prefix` and is otherwise extended by the
/// least point moved by a new strong generator. Transversals are stored
/// explicitly, grow breadth-first and never change once assigned, so a
/// Schreier generator checked once stays checked.
class GeneratedGroup {
 public:
  GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                 std::vector<Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }

  /// Exact group order; product of the fundamental orbit lengths.
  std::uint64_t order() const;
  std::vector<std::size_t> fundamental_orbit_sizes() const;

  bool contains(const Permutation& g) const;

  /// Generators of the stabilizer of `alpha`.
  GeneratedGroup point_stabilizer(Point alpha) const;
  /// Pointwise stabilizer of a tuple of points.
  GeneratedGroup pointwise_stabilizer(std::span<const Point> points) const;

  std::vector<Point> orbit(Point alpha) const;
  /// Orbit id per point; ids numbered by least point of the orbit.
  std::vector<std::uint32_t> orbit_ids() const;
  std::size_t num_orbits() const;
  bool is_transitive() const { return num_orbits() <= 1; }

  /// BFS closure of {(alpha, beta)} under the generators.
  std::vector<std::pair<Point, Point>> orbit_of_pair(Point alpha, Point beta) const;

  /// Every element of the group; throws ResourceError above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 100000) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> gens;            // indices into strong_, all fix earlier base points
    std::vector<Point> orbit;                 // orbit[0] == base_point
    std::vector<std::int32_t> index_of;       // point -> orbit index or -1
    std::vector<Permutation> transversal;     // u(base_point) == orbit[i]
    std::vector<Permutation> transversal_inv;
    std::vector<std::vector<bool>> checked;   // [orbit index][gen slot]
  };

  void add_level(Point base_point);
  void add_strong(Permutation g);
  void grow_orbit(Level& lv);
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;
  void run_schreier_sims();

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace cohcfg
