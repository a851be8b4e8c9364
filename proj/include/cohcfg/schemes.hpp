#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cohcfg/configuration.hpp"
#include "cohcfg/finitefield.hpp"
#include "cohcfg/fusion.hpp"
#include "cohcfg/permgroup.hpp"
#include "cohcfg/report.hpp"

namespace cohcfg {

/// Writes q = p^d; returns false if q is not a prime power.
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& d);

/// Unordered conjugate pairs {w, w^q}, w in GF(q^2) \ GF(q), q = 2^d, with
/// the projective-line maps acting on them.
struct HollmannModel {
  std::shared_ptr<const Field> field;
  QuadExtension ext;
  /// Canonical representatives, sorted by (b, a).
  std::vector<QuadExtension::Elem> points;
  /// w -> w + 1, w -> zeta w, w -> 1/w
  std::vector<Permutation> psl_generators;
  /// w -> w^2
  Permutation frobenius;

  /// Index of the point {w, w^q}; w must lie outside the base field.
  Point index_of(QuadExtension::Elem w) const;

  explicit HollmannModel(std::uint32_t q);

 private:
  std::vector<Point> index_;  // b * q + a -> point
};

struct GroupScheme {
  CoherentConfiguration scheme;
  GeneratedGroup group;
};

/// inv(PSL(2,q)) on q(q-1)/2 points; q = 2^d with 3 <= d <= 7.
GroupScheme hollmann_large(std::uint32_t q);

struct SmallHollmann {
  CoherentConfiguration scheme;
  /// PGammaL(2,q) on the same points
  GeneratedGroup group;
  /// the large scheme and its fusion data
  CoherentConfiguration large;
  FusionMap fusion;
};

/// inv(PGammaL(2,q)), q = 2^d with d in {3, 5}. Built as the orbital
/// scheme and as the fusion of the large scheme under the Frobenius; the
/// two are checked to coincide (IntegrityError otherwise).
SmallHollmann hollmann_small(std::uint32_t q);

/// Affine maps on GF(q)^2, point (x, y) having index x * q + y.
struct PassmanModel {
  std::shared_ptr<const Field> field;
  /// (x, y) -> (ax + b, y/a + c) for (a,b,c) in {(zeta,0,0), (1,1,0), (1,0,1)}
  std::vector<Permutation> h_generators;
  /// diag(-1, 1) and the coordinate swap; they generate all 8 signed
  /// permutation matrices
  std::vector<Permutation> d_generators;
  /// (x, y) -> (y, -x)
  Permutation rotation;

  explicit PassmanModel(std::uint32_t q);
  Point point(Field::Code x, Field::Code y) const { return x * field->order() + y; }
  /// The map (x, y) -> (ax + b, y/a + c).
  Permutation h_element(Field::Code a, Field::Code b, Field::Code c) const;
  /// The linear map with the given integer matrix entries in {-1, 0, 1}.
  Permutation linear(int m00, int m01, int m10, int m11) const;
};

struct PassmanScheme {
  CoherentConfiguration scheme;       // inv(G)
  GeneratedGroup group;               // G = <H, D>
  CoherentConfiguration frobenius_part;  // inv(H)
  GeneratedGroup frobenius_group;     // H
  /// the order-2 group on colors of inv(H) whose fusion is inv(G)
  FusionMap fusion;
  /// color of inv(H) through ((0,0), (1,1)) and its fused color in inv(G)
  Color u = 0;
  Color t = 0;
};

/// Odd prime power 3 <= q <= 31. The fusion identity inv(G) = inv(H)^Phi
/// with |Phi| = 2 is checked (IntegrityError otherwise).
PassmanScheme passman_scheme(std::uint32_t q);

/// Families accepted by build_family.
const std::vector<std::string>& scheme_families();

/// hollmann-large, hollmann-small, passman (inv(G)) or passman-frobenius
/// (inv(H)), with the group whose orbitals it is. UsageError otherwise.
GroupScheme build_family(const std::string& family, std::uint32_t q);

struct TraceLabeling {
  VerificationReport report;
  /// trace-zero elements in code order and the color assigned to each
  std::vector<Field::Code> elements;
  std::vector<Color> colors;
};

/// Searches a bijection x -> s_x from the trace-zero set onto the colors of
/// the large scheme with s_0 reflexive and, for z != 0,
/// c_{s_x s_y}^{s_z} = 1 iff Tr(xz) = 0 and x + y + z = 0.
TraceLabeling t0_cross_check(std::uint32_t q);

}  // namespace cohcfg
