// Runs the acceptance criteria and prints one PASS/FAIL line per criterion,
// preceded by the ledger lines and sub-check details it is based on.
// The exit status counts criteria whose outcome differs from `kExpected`.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "cohcfg/analysis.hpp"
#include "cohcfg/closure.hpp"
#include "cohcfg/fusion.hpp"
#include "cohcfg/orbitals.hpp"
#include "cohcfg/schemes.hpp"
#include "cohcfg/structure.hpp"
#include "cohcfg/tensor.hpp"

using namespace cohcfg;

namespace {

// Outcome each criterion is known to produce. Criterion 8 fails: the
// designated relation u has m_u = 2 for q >= 5, m_t exceeds 4 for q >= 9,
// and so the bound route at q = 13 does not apply.
constexpr bool kExpected[12] = {false, true, true, true, true, true, true, true, false, true, true, true};

// Base numbers fixed after the first exact computation.
constexpr std::size_t kBaseHollmann8 = 3, kBasePassman3 = 3, kBasePassman5 = 3;

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  bool check(bool ok, const std::string& what) {
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass &= ok;
    return ok;
  }
  void claim(const VerificationReport& r) {
    std::cout << "  " << r.ledger_line() << "\n";
    for (const auto& f : r.failures) std::cout << "    ! " << f << "\n";
    check(r.pass, "CLAIM " + r.claim + " " + r.params);
  }
  void note(const std::string& s) { notes.push_back("     " + s); }
};

std::string witness(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.witnesses)
    if (k == key) return v;
  return "";
}

std::vector<std::pair<std::string, GroupScheme>> built_schemes() {
  std::vector<std::pair<std::string, GroupScheme>> out;
  for (std::uint32_t q : {8u, 16u, 32u}) out.emplace_back("hollmann-large q=" + std::to_string(q), hollmann_large(q));
  for (std::uint32_t q : {8u, 32u}) out.emplace_back("hollmann-small q=" + std::to_string(q), build_family("hollmann-small", q));
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    out.emplace_back("passman q=" + std::to_string(q), build_family("passman", q));
    out.emplace_back("passman-frobenius q=" + std::to_string(q), build_family("passman-frobenius", q));
  }
  return out;
}

void c1(Criterion& c) {
  for (std::uint32_t q : {8u, 16u, 32u}) c.claim(verify_theorem("160520i", "q=" + std::to_string(q)));
}

void c2(Criterion& c) {
  for (std::uint32_t q : {8u, 16u, 32u}) c.claim(verify_theorem("250720c", "q=" + std::to_string(q)));
}

void c3(Criterion& c) {
  const auto h8 = hollmann_large(8);
  const AutGroup a = automorphism_group(h8.scheme);
  c.check(a.order == 504, "|aut(X)| = " + std::to_string(a.order) + " at q=8 (" + to_string(a.method) + ")");
  const AutGroup b = automorphism_group(extend_points(h8.scheme, {0}));
  c.check(b.order == 18, "|aut(X_alpha)| = " + std::to_string(b.order) + " at q=8 (" + to_string(b.method) + ")");
  const AutGroup d = automorphism_group(extend_points(hollmann_large(16).scheme, {0}));
  c.check(d.order == 34 && d.method == AutMethod::individualization_refinement,
          "|aut(X_alpha)| = " + std::to_string(d.order) + " at q=16 (" + to_string(d.method) + ")");
  for (std::uint32_t q : {8u, 16u, 32u}) {
    const auto h = hollmann_large(q);
    const std::uint64_t s = h.group.point_stabilizer(0).order();
    c.check(s == 2ull * (q + 1), "|G_alpha| = " + std::to_string(s) + " at q=" + std::to_string(q));
  }
  c.claim(verify_theorem("250720b", "q=8"));
  c.claim(verify_theorem("250720b", "q=16"));
}

void c4(Criterion& c) {
  for (std::uint32_t q : {16u, 32u}) c.claim(verify_theorem("170520w1", "q=" + std::to_string(q)));
  const auto r8 = verify_theorem("170520w1", "q=8");
  std::cout << "  " << r8.ledger_line() << "\n";
  c.note("q=8 recorded: " + std::string(r8.pass ? "every fiber pair has a matching" : "some fiber pair lacks a matching"));
  const auto g3 = verify_theorem("4151533a", "d=3");
  std::cout << "  " << g3.ledger_line() << "\n";
  c.note("graph at d=3: " + witness(g3, "vertices") + " vertices, " + witness(g3, "edges") + " edges, " +
         witness(g3, "components") + " components");
  for (std::uint32_t d : {4u, 5u}) {
    const auto g = verify_theorem("4151533a", "d=" + std::to_string(d));
    std::cout << "  " << g.ledger_line() << "\n";
  }
}

void c5(Criterion& c) {
  for (std::uint32_t q : {8u, 16u}) {
    const auto r = verify_theorem("030620i", "q=" + std::to_string(q));
    c.claim(r);
    c.check(witness(r, "inference").rfind("s(X)<=2", 0) == 0, "inference recorded at q=" + std::to_string(q));
    c.claim(verify_theorem("250720f", "q=" + std::to_string(q)));
    c.claim(verify_theorem("180520i", "q=" + std::to_string(q)));
  }
}

void c6(Criterion& c) {
  c.claim(verify_theorem("270520i", "q=8"));
  c.claim(verify_theorem("270520i", "q=32"));
}

void c7(Criterion& c) { c.claim(verify_theorem("280520a", "q=32")); }

void c8(Criterion& c) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const std::string qs = "q=" + std::to_string(q);
    const auto r = verify_theorem("300520a", qs);
    c.claim(r);
    c.claim(verify_theorem("310520d", qs));
  }
  const auto p = passman_scheme(13);
  const auto bound = check_cor_423939b(p.scheme, p.t, &p.group);
  std::cout << "  " << bound.ledger_line() << "\n";
  c.check(witness(bound, "hypothesis") == "met",
          "bound route at q=13: (2m_t-1)c = " + witness(bound, "lhs") + " vs n = 169 (m_t = " +
              witness(bound, "m_t") + ", c = " + witness(bound, "c") + ")");
}

void c9(Criterion& c) {
  std::mt19937_64 rng(0);
  std::size_t instances = 0, partly = 0, violations = 0, uncertified = 0;
  auto examine = [&](const CoherentConfiguration& x, const std::string& label) {
    ++instances;
    const auto r = check_bound_201444a(x);
    if (!r.pass) {
      ++violations;
      c.check(false, label + ": " + r.failures.front());
    }
    if (!partly_regular(x).partly_regular) return;
    ++partly;
    const AutGroup a = automorphism_group(x);
    const auto s = is_schurian(x, a.generators);
    const auto sep = is_separable_small(x);
    if (a.method != AutMethod::partly_regular_fastpath || !s.pass || !sep.pass ||
        witness(sep, "by") != "partly-regular") {
      ++uncertified;
      c.check(false, label + ": partly regular but not certified");
    }
  };
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 4 + rng() % 13;
    std::vector<Permutation> gens;
    for (std::size_t k = 1 + rng() % 2; k > 0; --k) {
      // shuffle a random subset of the points, so that many groups stay
      // small and intransitive
      std::vector<Point> im(n), support;
      for (Point j = 0; j < n; ++j) {
        im[j] = j;
        if (rng() % 2) support.push_back(j);
      }
      std::vector<Point> moved = support;
      std::shuffle(moved.begin(), moved.end(), rng);
      for (std::size_t j = 0; j < support.size(); ++j) im[support[j]] = moved[j];
      gens.emplace_back(im);
    }
    const auto x = orbitals(n, gens);
    examine(x, "random #" + std::to_string(i));
    examine(extend_points(x, {static_cast<Point>(rng() % n)}), "random #" + std::to_string(i) + " extended");
  }
  for (const auto& [name, s] : built_schemes()) {
    examine(s.scheme, name);
    const auto orbit = s.group.orbit_ids();
    std::vector<bool> seen(s.scheme.degree(), false);
    for (Point p = 0; p < s.scheme.degree(); ++p) {
      if (seen[orbit[p]]) continue;
      seen[orbit[p]] = true;
      examine(extend_points(s.scheme, {p}), name + " extended at " + std::to_string(p));
    }
  }
  c.note(std::to_string(instances) + " instances, " + std::to_string(partly) + " partly regular, " +
         std::to_string(violations) + " bound violations, " + std::to_string(uncertified) + " uncertified");
  c.check(violations == 0 && uncertified == 0, "bound holds and partly regular instances are certified");
}

void c10(Criterion& c) {
  for (const auto& [name, s] : built_schemes()) {
    const auto t = intersection_tensor(s.scheme, TensorCheck::full);
    const auto bad = tensor_identity_violations(s.scheme, t);
    c.check(bad.empty(), "tensor identities on " + name + (bad.empty() ? "" : ": " + bad.front()));
  }
  for (std::uint32_t q : {8u, 32u}) {
    const auto sh = hollmann_small(q);
    const Fusion fu{sh.scheme, sh.fusion};
    const auto v = fusion_bound_violations(sh.large, intersection_tensor(sh.large), fu,
                                           intersection_tensor(sh.scheme), 1000, q);
    c.check(v.empty(), "fusion bound, small Hollmann q=" + std::to_string(q) + " (" + std::to_string(v.size()) +
                           " violations in 1000 triples)");
  }
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const auto p = passman_scheme(q);
    const Fusion fu{p.scheme, p.fusion};
    const auto v = fusion_bound_violations(p.frobenius_part, intersection_tensor(p.frobenius_part), fu,
                                           intersection_tensor(p.scheme), 1000, q);
    c.check(v.empty(), "fusion bound, Passman q=" + std::to_string(q) + " (" + std::to_string(v.size()) +
                           " violations in 1000 triples)");
  }
}

void c11(Criterion& c) {
  const struct {
    std::string name;
    CoherentConfiguration x;
    std::size_t expected;
  } cases[] = {{"hollmann-large q=8", hollmann_large(8).scheme, kBaseHollmann8},
               {"passman q=3", passman_scheme(3).scheme, kBasePassman3},
               {"passman q=5", passman_scheme(5).scheme, kBasePassman5}};
  for (const auto& k : cases) {
    const auto first = base_number(k.x, BaseMode::exact);
    const auto second = base_number(k.x, BaseMode::exact);
    const auto greedy = base_number(k.x, BaseMode::greedy);
    c.check(first.value == k.expected && second.value == first.value && first.value <= 3 &&
                extend_points(k.x, first.points).is_discrete(),
            "b(" + k.name + ") = " + std::to_string(first.value) + " (recorded " + std::to_string(k.expected) +
                ", greedy " + std::to_string(greedy.value) + ")");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> all{
      {"large Hollmann parameters", c1},
      {"trace labeling of the basis relations", c2},
      {"stabilizer and automorphism orders", c3},
      {"matchings between fibers of X_alpha", c4},
      {"schurity and separability chain for X_alpha", c5},
      {"small Hollmann schemes", c6},
      {"two-point extensions of the small Hollmann scheme, d=5", c7},
      {"Passman suite", c8},
      {"fiber-size bound property suite", c9},
      {"tensor identities and fusion bound", c10},
      {"base numbers", c11}};
  std::vector<Criterion> done;
  int unexpected = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Criterion c{id, all[i].first};
    std::cout << "== criterion " << id << ": " << c.title << "\n";
    const auto start = std::chrono::steady_clock::now();
    try {
      all[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& n : c.notes) std::cout << "  " << n << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << "  time " << buf << "\n" << std::flush;
    if (c.pass != kExpected[id]) ++unexpected;
    done.push_back(std::move(c));
  }
  std::cout << "\n";
  for (const auto& c : done)
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title
              << (c.pass == kExpected[c.id] ? "" : "  [unexpected outcome]") << "\n";
  std::cout << "unexpected outcomes: " << unexpected << "\n";
  return unexpected;
}
