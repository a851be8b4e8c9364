#include "cohcfg/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

// Dense 0..k-1 ids in order of first occurrence.
std::vector<Color> compact(const ColorMatrix& m, std::size_t& count) {
  std::vector<Color> out(m.cells.size());
  const Color max_id = m.cells.empty() ? 0 : *std::max_element(m.cells.begin(), m.cells.end());
  count = 0;
  if (max_id < (1u << 24)) {
    std::vector<Color> map(static_cast<std::size_t>(max_id) + 1, UINT32_MAX);
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
      Color& slot = map[m.cells[i]];
      if (slot == UINT32_MAX) slot = static_cast<Color>(count++);
      out[i] = slot;
    }
  } else {
    std::unordered_map<Color, Color> map;
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
      auto [it, fresh] = map.try_emplace(m.cells[i], static_cast<Color>(count));
      if (fresh) ++count;
      out[i] = it->second;
    }
  }
  return out;
}

}  // namespace

ColorMatrix::ColorMatrix(std::size_t degree, std::vector<Color> values)
    : n(degree), cells(std::move(values)) {
  if (cells.size() != n * n) throw FormatError("color matrix has wrong number of cells");
}

std::size_t ColorMatrix::count_classes() const {
  std::size_t count = 0;
  compact(*this, count);
  return count;
}

ColorMatrix canonical_relabel(const ColorMatrix& m) {
  std::size_t k = 0;
  const std::vector<Color> ids = compact(m, k);
  const std::size_t n = m.n;
  struct Info {
    std::size_t size = 0;
    std::size_t least = SIZE_MAX;
    bool reflexive = false;
    std::size_t fiber_size = 0;
  };
  std::vector<Info> info(k);
  std::vector<std::size_t> diag_count(k, 0);
  for (std::size_t a = 0; a < n; ++a) ++diag_count[ids[a * n + a]];
  for (std::size_t cell = 0; cell < ids.size(); ++cell) {
    Info& in = info[ids[cell]];
    ++in.size;
    if (in.least == SIZE_MAX) in.least = cell;
  }
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t a = info[c].least / n, b = info[c].least % n;
    info[c].reflexive = (a == b);
    info[c].fiber_size = diag_count[ids[a * n + a]];
  }
  std::vector<Color> order(k);
  std::iota(order.begin(), order.end(), Color{0});
  std::sort(order.begin(), order.end(), [&](Color x, Color y) {
    const Info& a = info[x];
    const Info& b = info[y];
    if (a.reflexive != b.reflexive) return a.reflexive;
    // compare size/fiber_size as rationals
    const auto lhs = static_cast<unsigned __int128>(a.size) * b.fiber_size;
    const auto rhs = static_cast<unsigned __int128>(b.size) * a.fiber_size;
    if (lhs != rhs) return lhs < rhs;
    return a.least < b.least;
  });
  std::vector<Color> rank_of(k);
  for (std::size_t i = 0; i < k; ++i) rank_of[order[i]] = static_cast<Color>(i);
  ColorMatrix out;
  out.n = n;
  out.cells.resize(ids.size());
  for (std::size_t cell = 0; cell < ids.size(); ++cell) out.cells[cell] = rank_of[ids[cell]];
  return out;
}

bool same_partition(const ColorMatrix& a, const ColorMatrix& b) {
  if (a.n != b.n) return false;
  std::unordered_map<Color, Color> fwd, bwd;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    auto [f, f_new] = fwd.try_emplace(a.cells[i], b.cells[i]);
    if (f->second != b.cells[i]) return false;
    auto [g, g_new] = bwd.try_emplace(b.cells[i], a.cells[i]);
    if (g->second != a.cells[i]) return false;
  }
  return true;
}

std::vector<std::string> rainbow_violations(const ColorMatrix& m) {
  std::vector<std::string> out;
  const std::size_t n = m.n;
  if (m.cells.size() != n * n) {
    out.push_back("matrix has " + std::to_string(m.cells.size()) + " cells, expected " +
                  std::to_string(n * n));
    return out;
  }
  std::size_t k = 0;
  const std::vector<Color> ids = compact(m, k);
  std::vector<std::int8_t> on_diag(k, -1);  // -1 unknown, 1 diagonal, 0 off-diagonal
  std::vector<Color> transpose(k, UINT32_MAX);
  std::vector<Color> src(k, UINT32_MAX), dst(k, UINT32_MAX);
  auto cell_str = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Color c = ids[a * n + b];
      const std::int8_t d = (a == b) ? 1 : 0;
      if (on_diag[c] == -1) {
        on_diag[c] = d;
      } else if (on_diag[c] != d) {
        out.push_back("color " + std::to_string(m.cells[a * n + b]) +
                      " mixes diagonal and off-diagonal cells at " + cell_str(a, b));
        on_diag[c] = 2;
      }
      const Color t = ids[b * n + a];
      if (transpose[c] == UINT32_MAX) {
        transpose[c] = t;
      } else if (transpose[c] != t) {
        out.push_back("transpose of color " + std::to_string(m.cells[a * n + b]) +
                      " is not a single color, witness " + cell_str(a, b));
        transpose[c] = UINT32_MAX - 1;
      }
      const Color fa = ids[a * n + a], fb = ids[b * n + b];
      if (src[c] == UINT32_MAX) {
        src[c] = fa;
        dst[c] = fb;
      } else if (src[c] != fa || dst[c] != fb) {
        out.push_back("color " + std::to_string(m.cells[a * n + b]) +
                      " is not contained in a product of fibers, witness " + cell_str(a, b));
        src[c] = UINT32_MAX - 1;
      }
      if (out.size() > 64) return out;
    }
  return out;
}

CoherentConfiguration::CoherentConfiguration(const ColorMatrix& m) {
  const auto bad = rainbow_violations(m);
  if (!bad.empty()) throw FormatError("not a rainbow: " + bad.front());
  matrix_ = canonical_relabel(m);
  const std::size_t n = matrix_.n;
  rank_ = matrix_.count_classes();
  size_.assign(rank_, 0);
  rep_.assign(rank_, {0, 0});
  std::vector<bool> seen(rank_, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Color c = matrix_.cells[a * n + b];
      ++size_[c];
      if (!seen[c]) {
        seen[c] = true;
        rep_[c] = {static_cast<Point>(a), static_cast<Point>(b)};
      }
    }
  reflexive_.assign(rank_, false);
  std::vector<std::uint32_t> fiber_of_color(rank_, UINT32_MAX);
  fiber_of_point_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Color c = matrix_.cells[a * n + a];
    reflexive_[c] = true;
    if (fiber_of_color[c] == UINT32_MAX) {
      fiber_of_color[c] = static_cast<std::uint32_t>(fibers_.size());
      fibers_.emplace_back();
    }
    fiber_of_point_[a] = fiber_of_color[c];
    fibers_[fiber_of_color[c]].push_back(static_cast<Point>(a));
  }
  source_.resize(rank_);
  target_.resize(rank_);
  transpose_.resize(rank_);
  valency_.resize(rank_);
  for (Color c = 0; c < rank_; ++c) {
    const auto [a, b] = rep_[c];
    source_[c] = fiber_of_point_[a];
    target_[c] = fiber_of_point_[b];
    transpose_[c] = matrix_.at(b, a);
    valency_[c] = size_[c] / fibers_[source_[c]].size();
  }
}

bool CoherentConfiguration::is_symmetric() const {
  for (Color c = 0; c < rank_; ++c)
    if (transpose_[c] != c) return false;
  return true;
}

bool CoherentConfiguration::is_semiregular() const {
  return std::all_of(valency_.begin(), valency_.end(), [](std::size_t v) { return v == 1; });
}

std::vector<std::pair<Point, Point>> CoherentConfiguration::cells_of(Color s) const {
  std::vector<std::pair<Point, Point>> out;
  out.reserve(size_[s]);
  const std::size_t n = degree();
  for (Point a : fibers_[source_[s]])
    for (std::size_t b = 0; b < n; ++b)
      if (matrix_.cells[a * n + b] == s) out.emplace_back(a, static_cast<Point>(b));
  return out;
}

bool CoherentConfiguration::is_automorphism(const Permutation& f) const {
  const std::size_t n = degree();
  if (f.degree() != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    const Color* r = row(static_cast<Point>(a));
    const Color* fr = row(f(static_cast<Point>(a)));
    for (std::size_t b = 0; b < n; ++b)
      if (fr[f(static_cast<Point>(b))] != r[b]) return false;
  }
  return true;
}

CoherentConfiguration discrete_configuration(std::size_t n) {
  std::vector<Color> cells(n * n);
  std::iota(cells.begin(), cells.end(), Color{0});
  return CoherentConfiguration(ColorMatrix(n, std::move(cells)));
}

CoherentConfiguration trivial_configuration(std::size_t n) {
  std::vector<Color> cells(n * n, 1);
  for (std::size_t a = 0; a < n; ++a) cells[a * n + a] = 0;
  return CoherentConfiguration(ColorMatrix(n, std::move(cells)));
}

}  // namespace cohcfg
