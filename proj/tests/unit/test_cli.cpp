#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cohcfg/cli.hpp"
#include "cohcfg/closure.hpp"
#include "cohcfg/errors.hpp"
#include "cohcfg/io.hpp"
#include "cohcfg/schemes.hpp"

using namespace cohcfg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cohcfg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("file format round trip") {
  for (const auto& x : {hollmann_large(8).scheme, passman_scheme(5).scheme,
                        extend_points(hollmann_large(8).scheme, {2})}) {
    const std::string text = to_text(x);
    std::istringstream in(text);
    const ColorMatrix m = read_matrix(in);
    CHECK(m == x.matrix());
    CHECK(to_text(CoherentConfiguration(m)) == text);
  }
  const std::string text = to_text(trivial_configuration(2));
  CHECK(text == "COHCFG v1\ndegree 2\nrank 2\n0 1\n1 0\n");
}

TEST_CASE("malformed files") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return read_matrix(in);
  };
  CHECK_THROWS_AS(parse("COHCFG v2\ndegree 1\nrank 1\n0\n"), FormatError);
  CHECK_THROWS_AS(parse("COHCFG v1\ndegree x\nrank 1\n0\n"), FormatError);
  CHECK_THROWS_AS(parse("COHCFG v1\ndegree 2\nrank 2\n0 1\n1\n"), FormatError);
  CHECK_THROWS_AS(parse("COHCFG v1\ndegree 2\nrank 2\n0 1\n1 2\n"), FormatError);
  CHECK_THROWS_AS(parse("COHCFG v1\ndegree 2\nrank 3\n0 1\n1 0\n"), FormatError);
  CHECK_THROWS_AS(parse("COHCFG v1\ndegree 1\nrank 1\n0\n5\n"), FormatError);
  CHECK_THROWS_AS(parse("COHCFG v1\ndegree 1\nrank 1\n"), FormatError);
  CHECK(parse("COHCFG v1\r\ndegree 1\r\nrank 1\r\n0\r\n").n == 1);
}

TEST_CASE("build") {
  const auto f = tmp("h8.cfg");
  Run r = run({"build", "--family", "hollmann-large", "--q", "8", "-o", f.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "degree 28 rank 4 valency 9\n");
  CHECK(slurp(f) == to_text(hollmann_large(8).scheme));
  r = run({"build", "--family", "passman", "--q", "5", "-o", tmp("p5.cfg").string()});
  CHECK(r.out == "degree 25 rank 4 valency 8\n");
  r = run({"build", "--family", "hollmann-small", "--q", "8", "-o", tmp("s8.cfg").string()});
  CHECK(r.out == "degree 28 rank 2 valency 27\n");
  r = run({"build", "--family", "passman", "--q", "8"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"build", "--family", "nonsense", "--q", "8"}).code == 2);
  r = run({"build", "--family", "passman", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == to_text(passman_scheme(3).scheme));
}

TEST_CASE("analyze") {
  const auto f16 = tmp("h16.cfg");
  run({"build", "--family", "hollmann-large", "--q", "16", "-o", f16.string()});
  Run r = run({"analyze", f16.string(), "--pseudocyclic"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "pseudocyclic true"));
  CHECK(has_line(r.out, "valency 17"));
  const auto p7 = tmp("p7.cfg");
  run({"build", "--family", "passman", "--q", "7", "-o", p7.string()});
  r = run({"analyze", p7.string(), "--indistinguishing", "--tensor", "--validate", "full"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "c 11"));
  CHECK(has_line(r.out, "valid true"));
  CHECK(has_line(r.out, "tensor_identities ok"));
  r = run({"analyze", p7.string(), "--partly-regular"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "partly_regular false"));
}

TEST_CASE("analyze detects a corrupted cell") {
  // swap a symmetric pair of cells between two colors: the rainbow axioms
  // still hold but coherence breaks
  const auto x = passman_scheme(5).scheme;
  ColorMatrix m = x.matrix();
  Point a = 0, b = 1;
  while (m.at(0, b) == m.at(0, 1)) ++b;
  const Color c1 = m.at(a, 1), c2 = m.at(a, b);
  m.at(0, 1) = m.at(1, 0) = c2;
  m.at(0, b) = m.at(b, 0) = c1;
  const auto f = tmp("bad.cfg");
  {
    std::ofstream out(f);
    out << "COHCFG v1\ndegree 25\nrank " << x.rank() << "\n";
    for (Point i = 0; i < 25; ++i)
      for (Point j = 0; j < 25; ++j) out << m.at(i, j) << (j + 1 < 25 ? ' ' : '\n');
  }
  const Run r = run({"analyze", f.string(), "--validate", "full"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "valid false"));
  CHECK(r.out.find("violation") != std::string::npos);

  const auto g = tmp("garbage.cfg");
  std::ofstream(g) << "hello\n";
  CHECK(run({"analyze", g.string()}).code == 2);
  CHECK(run({"analyze", tmp("missing.cfg").string()}).code == 2);
}

TEST_CASE("extend, aut, basenum") {
  const auto f = tmp("h8e.cfg");
  run({"build", "--family", "hollmann-large", "--q", "8", "-o", f.string()});
  const auto e = tmp("h8a.cfg");
  Run r = run({"extend", f.string(), "--points", "0", "-o", e.string()});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "fiber_sizes 1 9 9 9"));
  CHECK(fs::exists(e));
  r = run({"aut", f.string()});
  CHECK(has_line(r.out, "order 504"));
  r = run({"aut", e.string()});
  CHECK(has_line(r.out, "order 18"));
  r = run({"basenum", f.string(), "--mode", "exact"});
  CHECK(r.out == "3\n");
  CHECK(run({"extend", f.string(), "--points", "0,99"}).code == 2);
  CHECK(run({"extend", f.string(), "--points", "1,1"}).code == 2);
  CHECK(run({"basenum", f.string(), "--mode", "clever"}).code == 2);
  const auto big = tmp("h32.cfg");
  run({"build", "--family", "hollmann-large", "--q", "32", "-o", big.string()});
  r = run({"aut", big.string()});
  CHECK(r.code == 3);
  CHECK(run({"basenum", big.string(), "--mode", "exact"}).code == 3);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--claim", "310520d", "--params", "q=5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("CLAIM 310520d q=5 PASS", 0) == 0);
  r = run({"verify", "--claim", "4151533a", "--params", "d=3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(run({"verify", "--claim", "bogus", "--params", "q=5"}).code == 2);
  CHECK(run({"verify", "--claim", "list"}).out.find("030620i") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
