#include "cohcfg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

constexpr const char* kHeader = "COHCFG v1";
constexpr std::size_t kMaxDegree = 1u << 14;

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::size_t keyed_value(std::istream& in, std::size_t line, const std::string& key) {
  std::string text;
  if (!std::getline(in, text)) bad(line, "missing '" + key + "' line");
  text = strip_cr(text);
  const std::string prefix = key + " ";
  if (text.rfind(prefix, 0) != 0) bad(line, "expected '" + key + " <int>', got '" + text + "'");
  std::size_t v = 0;
  const char* first = text.data() + prefix.size();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) bad(line, "bad integer in '" + text + "'");
  return v;
}

}  // namespace

ColorMatrix read_matrix(std::istream& in) {
  std::string text;
  if (!std::getline(in, text) || strip_cr(text) != kHeader) bad(1, "expected header 'COHCFG v1'");
  const std::size_t n = keyed_value(in, 2, "degree");
  const std::size_t r = keyed_value(in, 3, "rank");
  if (n == 0 || n > kMaxDegree) bad(2, "degree out of range");
  if (r == 0 || r > n * n) bad(3, "rank out of range");
  std::vector<Color> cells;
  cells.reserve(n * n);
  std::vector<bool> used(r, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t line = 4 + i;
    if (!std::getline(in, text)) bad(line, "missing matrix row " + std::to_string(i));
    text = strip_cr(text);
    const char* p = text.data();
    const char* end = p + text.size();
    std::size_t count = 0;
    while (p < end) {
      while (p < end && *p == ' ') ++p;
      if (p == end) break;
      std::size_t v = 0;
      const auto [q, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (q < end && *q != ' ')) bad(line, "bad color id");
      if (v >= r) bad(line, "color id " + std::to_string(v) + " >= rank");
      used[v] = true;
      cells.push_back(static_cast<Color>(v));
      ++count;
      p = q;
    }
    if (count != n) bad(line, "row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
  }
  while (std::getline(in, text))
    if (!strip_cr(text).empty()) bad(4 + n, "trailing content");
  for (std::size_t c = 0; c < r; ++c)
    if (!used[c]) bad(3, "color id " + std::to_string(c) + " never occurs");
  return ColorMatrix(n, std::move(cells));
}

ColorMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_matrix(in);
}

void write_configuration(std::ostream& out, const CoherentConfiguration& cfg) {
  const std::size_t n = cfg.degree();
  out << kHeader << "\ndegree " << n << "\nrank " << cfg.rank() << "\n";
  std::string line;
  for (Point a = 0; a < n; ++a) {
    line.clear();
    for (Point b = 0; b < n; ++b) {
      if (b) line += ' ';
      line += std::to_string(cfg.color(a, b));
    }
    line += '\n';
    out << line;
  }
}

void write_configuration_file(const std::string& path, const CoherentConfiguration& cfg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  write_configuration(out, cfg);
  if (!out) throw UsageError("write failed for " + path);
}

std::string to_text(const CoherentConfiguration& cfg) {
  std::ostringstream s;
  write_configuration(s, cfg);
  return s.str();
}

}  // namespace cohcfg
