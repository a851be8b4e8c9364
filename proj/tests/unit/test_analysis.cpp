#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "cohcfg/analysis.hpp"
#include "cohcfg/closure.hpp"
#include "cohcfg/errors.hpp"
#include "cohcfg/orbitals.hpp"
#include "cohcfg/schemes.hpp"
#include "cohcfg/structure.hpp"
#include "cohcfg/tensor.hpp"

using namespace cohcfg;

namespace {

// Counts color-preserving bijections by plain backtracking: a partial map
// is extended only while every assigned pair keeps its color.
std::uint64_t brute_aut_order(const CoherentConfiguration& x) {
  const std::size_t n = x.degree();
  std::vector<Point> img(n);
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  std::function<void(Point)> go = [&](Point a) {
    if (a == n) {
      ++count;
      return;
    }
    for (Point b = 0; b < n; ++b) {
      if (used[b] || x.color(b, b) != x.color(a, a)) continue;
      bool ok = true;
      for (Point c = 0; c < a && ok; ++c)
        ok = x.color(img[c], b) == x.color(c, a) && x.color(b, img[c]) == x.color(a, c);
      if (!ok) continue;
      used[b] = true;
      img[a] = b;
      go(a + 1);
      used[b] = false;
    }
  };
  go(0);
  return count;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = i;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(im);
}

ColorMatrix relabel(const CoherentConfiguration& x, const Permutation& g) {
  ColorMatrix m(x.degree(), std::vector<Color>(x.degree() * x.degree()));
  for (Point a = 0; a < x.degree(); ++a)
    for (Point b = 0; b < x.degree(); ++b) m.at(g(a), g(b)) = x.color(a, b);
  return m;
}

// Minimum size of a point tuple whose extension is discrete, trying every
// tuple without pruning.
std::size_t brute_base(const CoherentConfiguration& x, std::size_t limit) {
  const std::size_t n = x.degree();
  std::vector<Point> pts;
  std::function<bool(std::size_t)> go = [&](std::size_t left) {
    if (extend_points(x, pts).is_discrete()) return true;
    if (left == 0) return false;
    for (Point p = pts.empty() ? 0 : pts.back() + 1; p < n; ++p) {
      pts.push_back(p);
      if (go(left - 1)) return true;
      pts.pop_back();
    }
    return false;
  };
  for (std::size_t k = 0; k <= limit; ++k)
    if (go(k)) return k;
  return limit + 1;
}

// Trace of a GF(2^d) element as the parity of x + x^2 + ... reduced by
// long division, independent of the library's field tables.
std::uint32_t oracle_trace(std::uint32_t x, std::uint32_t modulus, int d) {
  auto mulmod = [&](std::uint32_t a, std::uint32_t b) {
    std::uint64_t p = 0;
    for (int i = 0; i < 32; ++i)
      if (b >> i & 1) p ^= static_cast<std::uint64_t>(a) << i;
    for (int i = 63; i >= d; --i)
      if (p >> i & 1) p ^= static_cast<std::uint64_t>(modulus) << (i - d);
    return static_cast<std::uint32_t>(p);
  };
  std::uint32_t t = 0, y = x;
  for (int i = 0; i < d; ++i, y = mulmod(y, y)) t ^= y;
  return t;
}

}  // namespace

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(discrete_configuration(5)).order == 1);
  const auto h8 = hollmann_large(8);
  const AutGroup a = automorphism_group(h8.scheme);
  CHECK(a.order == 504);
  CHECK(a.method == AutMethod::individualization_refinement);
  for (const auto& g : a.generators) CHECK(h8.scheme.is_automorphism(g));
  const auto xa = extend_points(h8.scheme, {0});
  const AutGroup b = automorphism_group(xa);
  CHECK(b.order == 18);
  bool order9 = false, nonabelian = false;
  const auto grp = b.group(28);
  for (const auto& e : grp.elements()) order9 |= e.order() == 9;
  for (const auto& x : b.generators)
    for (const auto& y : b.generators) nonabelian |= x.then(y) != y.then(x);
  CHECK(order9);
  CHECK(nonabelian);
  const AutGroup c = automorphism_group(h8.scheme, h8.group.generators());
  CHECK(c.method == AutMethod::known_group_confirmed);
  CHECK(c.order == 504);
  CHECK(automorphism_group(extend_points(hollmann_large(16).scheme, {0})).order == 34);
  CHECK_THROWS_AS(automorphism_group(hollmann_large(32).scheme), ResourceError);
  CHECK_THROWS_AS(automorphism_group(h8.scheme, {Permutation::identity(27)}), UsageError);
}

TEST_CASE("automorphism orders agree with brute-force backtracking") {
  std::vector<CoherentConfiguration> cases{hollmann_large(8).scheme, extend_points(hollmann_large(8).scheme, {0}),
                                           passman_scheme(3).scheme, passman_scheme(5).scheme,
                                           passman_scheme(5).frobenius_part, trivial_configuration(6)};
  const auto p5 = passman_scheme(5);
  cases.push_back(extend_points(p5.scheme, {0, 6}));
  cases.push_back(orbitals(7, std::vector<Permutation>{Permutation({1, 2, 3, 4, 5, 6, 0})}));
  for (const auto& x : cases) {
    const AutGroup a = automorphism_group(x);
    CHECK(a.order == brute_aut_order(x));
    for (const auto& g : a.generators) CHECK(x.is_automorphism(g));
  }
}

TEST_CASE("partly regular fast path") {
  const auto p5 = passman_scheme(5);
  const auto ext = extend_points(p5.scheme, {0, 6});
  REQUIRE(partly_regular(ext).partly_regular);
  const AutGroup a = automorphism_group(ext);
  CHECK(a.method == AutMethod::partly_regular_fastpath);
  CHECK(a.order == brute_aut_order(ext));
  // fast path works above the generic degree guard
  const auto s32 = hollmann_small(32);
  const auto e32 = extend_points(s32.scheme, {0, 1});
  REQUIRE(partly_regular(e32).partly_regular);
  const AutGroup b = automorphism_group(e32);
  CHECK(b.method == AutMethod::partly_regular_fastpath);
  CHECK(b.order == s32.group.pointwise_stabilizer(std::vector<Point>{0, 1}).order());
}

TEST_CASE("isomorphism search") {
  std::mt19937 rng(5);
  for (const auto& x : {hollmann_large(8).scheme, passman_scheme(5).scheme,
                        extend_points(hollmann_large(8).scheme, {3})}) {
    const Permutation g = random_perm(x.degree(), rng);
    const auto y = relabel(x, g);
    const auto f = find_isomorphism(x.matrix(), y);
    REQUIRE(f.has_value());
    for (Point a = 0; a < x.degree(); ++a)
      for (Point b = 0; b < x.degree(); ++b) REQUIRE(y.at((*f)(a), (*f)(b)) == x.color(a, b));
  }
  const auto h8 = hollmann_large(8).scheme;
  CHECK_FALSE(find_isomorphism(h8.matrix(), extend_points(h8, {0}).matrix()).has_value());
  CHECK_FALSE(find_isomorphism(h8.matrix(), hollmann_small(8).scheme.matrix()).has_value());
}

TEST_CASE("algebraic automorphisms") {
  const auto t = trivial_configuration(6);
  CHECK(algebraic_automorphisms(t, intersection_tensor(t)).size() == 1);
  const auto h8 = hollmann_large(8).scheme;
  const auto phis = algebraic_automorphisms(h8, intersection_tensor(h8));
  CHECK(phis.size() == 3);  // Frobenius induced
  for (const auto& phi : phis) CHECK(inducing_bijection(h8, phi).has_value());
}

TEST_CASE("matching graph") {
  const std::uint32_t moduli[] = {0, 0, 0, 0b1011, 0b10011, 0b100101};
  for (std::uint32_t d = 3; d <= 5; ++d) {
    const MatchingGraph g = matching_graph(d);
    CHECK(g.vertices.size() == (1u << (d - 1)) - 1);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      CHECK(oracle_trace(g.vertices[i], moduli[d], static_cast<int>(d)) == 0);
      for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
        const auto fx = Field::make(2, d);
        edges += oracle_trace(fx->mul(g.vertices[i], g.vertices[j]), moduli[d], static_cast<int>(d)) == 0;
      }
    }
    CHECK(g.edges == edges);
  }
  const MatchingGraph g3 = matching_graph(3);
  CHECK(g3.edges == 0);
  CHECK_FALSE(g3.connected);
  CHECK(g3.components.size() == 3);
  const MatchingGraph g4 = matching_graph(4);
  CHECK(g4.vertices.size() == 7);
  CHECK(g4.connected);
  CHECK(matching_graph(5).connected);
  CHECK(matching_graph(8).connected);
  CHECK_THROWS_AS(matching_graph(2), UsageError);
  CHECK_THROWS_AS(matching_graph(14), UsageError);
}

TEST_CASE("matchings between fibers of the point extension") {
  const auto r8 = verify_matchings(8);
  CHECK(r8.pass);
  const auto r16 = verify_matchings(16);
  CHECK(r16.pass);
  CHECK_THROWS_AS(verify_matchings(64), UsageError);
}

TEST_CASE("fiber-size bound") {
  const auto r = check_bound_201444a(hollmann_large(8).scheme);
  CHECK(r.pass);
  CHECK(r.ledger_line().find("lhs=440") != std::string::npos);
  CHECK(check_bound_201444a(discrete_configuration(3)).pass);
  for (const auto& name : scheme_families()) {
    const auto s = build_family(name, name.rfind("hollmann", 0) == 0 ? 8 : 5);
    for (Point p = 0; p < s.scheme.degree(); p += 3) CHECK(check_bound_201444a(extend_points(s.scheme, {p})).pass);
  }
}

TEST_CASE("fiber-size bound on random orbital configurations") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 4 + rng() % 9;
    std::vector<Permutation> gens;
    for (std::size_t k = rng() % 3; k > 0; --k) gens.push_back(random_perm(n, rng));
    const auto x = orbitals(n, gens);
    CHECK(check_bound_201444a(x).pass);
    const auto y = extend_points(x, {static_cast<Point>(rng() % n)});
    CHECK(check_bound_201444a(y).pass);
    if (partly_regular(y).partly_regular) {
      CHECK(automorphism_group(y).method == AutMethod::partly_regular_fastpath);
      CHECK(is_schurian(y).pass);
      CHECK(is_separable_small(y).pass);
    }
  }
}

TEST_CASE("two-point extensions of partly regular inputs") {
  const auto p5 = passman_scheme(5);
  const auto r = check_cor_423939b(p5.scheme, p5.t, &p5.group);
  CHECK(r.pass);
  CHECK(r.ledger_line().find("hypothesis=not-met") != std::string::npos);
  // thin schemes have c = 0, so the hypothesis always holds
  const auto c7 = orbitals(7, std::vector<Permutation>{Permutation({1, 2, 3, 4, 5, 6, 0})});
  const auto m = check_cor_423939b(c7, 1);
  CHECK(m.pass);
  CHECK(m.ledger_line().find("hypothesis=met") != std::string::npos);
  CHECK_THROWS_AS(check_cor_423939b(c7, 0), UsageError);
  const auto reps = pair_orbit_representatives(p5.scheme, p5.t, p5.group);
  CHECK(reps.size() == 1);
  CHECK(two_point_extensions_partly_regular(p5.scheme, p5.group).pass);
}

TEST_CASE("schurity and separability") {
  const auto h8 = hollmann_large(8);
  CHECK(is_schurian(h8.scheme).pass);
  const auto xa = extend_points(h8.scheme, {0});
  CHECK(is_schurian(xa).pass);
  const auto y = restriction_to_fiber(xa, 1);
  CHECK(is_schurian(y).pass);
  CHECK(is_separable_small(y).pass);
  CHECK(is_separable_small(trivial_configuration(9)).pass);
  CHECK(is_separable_small(h8.scheme).pass);
  CHECK_THROWS_AS(is_separable_small(xa), ResourceError);
  const auto p = passman_scheme(5);
  const auto pr = is_separable_small(extend_points(p.scheme, {0, 6}));
  CHECK(pr.pass);
  CHECK(pr.ledger_line().find("by=partly-regular") != std::string::npos);
}

TEST_CASE("base numbers") {
  CHECK(base_number(discrete_configuration(4), BaseMode::exact).value == 0);
  const auto c7 = orbitals(7, std::vector<Permutation>{Permutation({1, 2, 3, 4, 5, 6, 0})});
  CHECK(base_number(c7, BaseMode::exact).value == 1);
  CHECK(base_number(c7, BaseMode::greedy).value == 1);
  const auto h8 = hollmann_large(8).scheme;
  const auto exact = base_number(h8, BaseMode::exact);
  CHECK(exact.value == 3);
  CHECK(extend_points(h8, exact.points).is_discrete());
  CHECK(base_number(h8, BaseMode::greedy).value >= exact.value);
  const auto p3 = passman_scheme(3).scheme;
  CHECK(base_number(p3, BaseMode::exact).value == brute_base(p3, 4));
  CHECK(base_number(p3, BaseMode::exact).value == 3);
  const auto p5 = passman_scheme(5).scheme;
  CHECK(base_number(p5, BaseMode::exact).value == brute_base(p5, 3));
  CHECK(base_number(p5, BaseMode::exact).value == 3);
  CHECK(brute_base(h8, 3) == 3);
  CHECK_THROWS_AS(base_number(hollmann_large(32).scheme, BaseMode::exact), ResourceError);
}

TEST_CASE("named checks") {
  const auto p = parse_params("q=8, family=passman");
  CHECK(p.at("q") == "8");
  CHECK(p.at("family") == "passman");
  CHECK_THROWS_AS(parse_params("q"), UsageError);
  CHECK(verify_theorem("160520i", "q=8").pass);
  CHECK(verify_theorem("180520i", "q=8").pass);
  CHECK(verify_theorem("310520d", "q=5").pass);
  const auto d3 = verify_theorem("4151533a", "d=3");
  CHECK_FALSE(d3.pass);
  CHECK_FALSE(d3.failures.empty());
  const auto bad = verify_theorem("unknown", "q=8");
  CHECK_FALSE(bad.pass);
  const auto err = verify_theorem("160520i", "q=9");
  CHECK_FALSE(err.pass);
  CHECK(err.failures.front().find("error") != std::string::npos);
  CHECK(verify_theorem("160520i", "q=8").ledger_line().rfind("CLAIM 160520i q=8 PASS", 0) == 0);
}
