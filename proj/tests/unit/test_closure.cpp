#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "cohcfg/closure.hpp"
#include "cohcfg/errors.hpp"
#include "cohcfg/orbitals.hpp"
#include "cohcfg/schemes.hpp"
#include "cohcfg/structure.hpp"
#include "cohcfg/tensor.hpp"

using namespace cohcfg;

namespace {

// Orbits on Omega x Omega of an explicitly listed set of group elements.
ColorMatrix brute_orbitals(std::size_t n, const std::vector<std::vector<Point>>& elements) {
  ColorMatrix m(n, std::vector<Color>(n * n, 0));
  std::vector<bool> done(n * n, false);
  Color next = 0;
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b) {
      if (done[a * n + b]) continue;
      for (const auto& g : elements) {
        done[g[a] * n + g[b]] = true;
        m.at(g[a], g[b]) = next;
      }
      ++next;
    }
  return m;
}

std::vector<std::vector<Point>> dihedral(std::size_t n) {
  std::vector<std::vector<Point>> out;
  for (std::size_t k = 0; k < n; ++k)
    for (int s : {1, -1}) {
      std::vector<Point> g(n);
      for (std::size_t i = 0; i < n; ++i)
        g[i] = static_cast<Point>((k + n + s * static_cast<long>(i) % static_cast<long>(n)) % n);
      out.push_back(g);
    }
  return out;
}

// Every class of `fine` lies inside one class of `coarse`.
bool refines(const ColorMatrix& fine, const ColorMatrix& coarse) {
  std::map<Color, Color> img;
  for (std::size_t i = 0; i < fine.cells.size(); ++i) {
    auto [it, fresh] = img.emplace(fine.cells[i], coarse.cells[i]);
    if (!fresh && it->second != coarse.cells[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("closure of the pentagon coloring is the dihedral orbital scheme") {
  ColorMatrix m(5, std::vector<Color>(25, 2));
  for (Point i = 0; i < 5; ++i) {
    m.at(i, i) = 0;
    m.at(i, (i + 1) % 5) = m.at((i + 1) % 5, i) = 1;
  }
  const CoherentConfiguration x = coherent_closure(m);
  CHECK(x.rank() == 3);
  CHECK(same_partition(x.matrix(), brute_orbitals(5, dihedral(5))));
}

TEST_CASE("closure of a non-coherent coloring") {
  // path 0-1-2-3: closure separates end points from inner points
  ColorMatrix m(4, std::vector<Color>(16, 2));
  for (Point i = 0; i < 4; ++i) m.at(i, i) = 0;
  for (Point i = 0; i < 3; ++i) m.at(i, i + 1) = m.at(i + 1, i) = 1;
  const CoherentConfiguration x = coherent_closure(m);
  CHECK(validate(x, ValidationLevel::full).pass);
  CHECK(x.fibers().size() == 2);
  CHECK(refines(x.matrix(), m));
  // the reflection of the path is the only nontrivial automorphism
  CHECK(same_partition(x.matrix(), brute_orbitals(4, {{0, 1, 2, 3}, {3, 2, 1, 0}})));
}

TEST_CASE("closure is idempotent and fixes coherent inputs") {
  const auto h = hollmann_large(8);
  CHECK(coherent_closure(h.scheme.matrix()) == h.scheme);
  const auto p = passman_scheme(5);
  CHECK(coherent_closure(p.frobenius_part.matrix()) == p.frobenius_part);
  const auto once = coherent_closure(ColorMatrix(6, std::vector<Color>(36, 0)));
  CHECK(once.is_trivial());
  CHECK(coherent_closure(once.matrix()) == once);
}

TEST_CASE("trivial partitions close to the trivial scheme") {
  for (std::size_t n : {2u, 3u, 7u}) {
    const auto x = coherent_closure(ColorPartition(n, std::vector<Color>(n * n, 0)));
    CHECK(x == trivial_configuration(n));
  }
}

TEST_CASE("closure is the coarsest coherent refinement") {
  // merging two colors of a coherent configuration and closing again stays
  // coarser than (or equal to) the original
  const auto x = extend_points(hollmann_large(8).scheme, {0});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const Color a = rng() % x.rank();
    Color b = rng() % x.rank();
    if (x.source_fiber(a) != x.source_fiber(b) || x.target_fiber(a) != x.target_fiber(b)) continue;
    ColorMatrix merged = x.matrix();
    for (auto& c : merged.cells)
      if (c == b) c = a;
    const auto closed = coherent_closure(merged);
    CHECK(refines(x.matrix(), closed.matrix()));
    CHECK(refines(closed.matrix(), merged));
  }
}

TEST_CASE("refine reports stable classes") {
  const auto h = hollmann_large(8).scheme;
  const Refinement r = refine(28, h.matrix().cells);
  CHECK(r.classes == 4);
  CHECK(r.rounds >= 1);
}

TEST_CASE("point extensions") {
  CHECK(extend_points(discrete_configuration(4), {2}) == discrete_configuration(4));
  const auto h8 = hollmann_large(8);
  const auto xa = extend_points(h8.scheme, {0});
  std::vector<std::size_t> sizes;
  for (const auto& f : xa.fibers()) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 9, 9, 9});
  CHECK(xa.fibers()[xa.fiber_of(0)].size() == 1);
  CHECK(refines(xa.matrix(), h8.scheme.matrix()));
  CHECK_THROWS_AS(extend_points(h8.scheme, {1, 1}), UsageError);
  CHECK_THROWS_AS(extend_points(h8.scheme, {28}), UsageError);
}

TEST_CASE("extension order independence") {
  const auto x = passman_scheme(5).scheme;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Point> pts;
    while (pts.size() < 3) {
      const Point p = rng() % 25;
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const auto all = extend_points(x, pts);
    const std::vector<Point> first(pts.begin(), pts.begin() + 1), rest(pts.begin() + 1, pts.end());
    CHECK(extend_points(extend_points(x, first), rest) == all);
    std::vector<Point> rev(pts.rbegin(), pts.rend());
    CHECK(extend_points(x, rev) == all);
  }
}

TEST_CASE("automorphisms fixing the points survive extension") {
  const auto h = hollmann_large(8);
  const auto xa = extend_points(h.scheme, {0});
  const GeneratedGroup stab = h.group.point_stabilizer(0);
  for (const auto& g : stab.generators()) CHECK(xa.is_automorphism(g));
  const auto p = passman_scheme(5);
  const std::vector<Point> pair{0, 6};
  const auto xb = extend_points(p.scheme, pair);
  const GeneratedGroup fix = p.group.pointwise_stabilizer(pair);
  for (const auto& g : fix.generators()) CHECK(xb.is_automorphism(g));
}

TEST_CASE("singleton propagation along a matching") {
  // extending by a point matched to another gives the same configuration
  const auto xa = extend_points(hollmann_large(8).scheme, {0});
  const auto y = extend_points(xa, {1});
  for (Color s = 0; s < xa.rank(); ++s) {
    if (xa.valency(s) != 1 || xa.valency(xa.transpose(s)) != 1 || xa.is_reflexive(s)) continue;
    const auto cells = xa.cells_of(s);
    for (auto [a, b] : cells)
      if (a == 1) CHECK(extend_points(xa, {b}) == y);
  }
}

TEST_CASE("two-extension") {
  const auto one = two_extension(discrete_configuration(1));
  CHECK(one.degree() == 1);
  // Sym(3) on ordered pairs of 3 points
  std::vector<std::vector<Point>> s3;
  std::vector<Point> perm{0, 1, 2};
  do {
    std::vector<Point> g(9);
    for (Point a = 0; a < 3; ++a)
      for (Point b = 0; b < 3; ++b) g[a * 3 + b] = perm[a] * 3 + perm[b];
    s3.push_back(g);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const auto t3 = two_extension(trivial_configuration(3));
  CHECK(t3.degree() == 9);
  CHECK(same_partition(t3.matrix(), brute_orbitals(9, s3)));

  std::vector<std::vector<Point>> z4;
  for (Point k = 0; k < 4; ++k) {
    std::vector<Point> g(16);
    for (Point a = 0; a < 4; ++a)
      for (Point b = 0; b < 4; ++b) g[a * 4 + b] = ((a + k) % 4) * 4 + (b + k) % 4;
    z4.push_back(g);
  }
  const auto c4 = orbitals(GeneratedGroup(4, {Permutation({1, 2, 3, 0})}));
  const auto e4 = two_extension(c4);
  CHECK(same_partition(e4.matrix(), brute_orbitals(16, z4)));
  std::vector<Point> off;
  for (Point a = 0; a < 4; ++a)
    for (Point b = 0; b < 4; ++b)
      if (a != b) off.push_back(a * 4 + b);
  CHECK(restriction(e4, off).is_semiregular());
  CHECK_THROWS_AS(two_extension(trivial_configuration(31)), ResourceError);
}
