#include "cohcfg/structure.hpp"

#include <algorithm>
#include <string>

#include "cohcfg/errors.hpp"
#include "cohcfg/profile.hpp"

namespace cohcfg {

namespace {

std::size_t direct_indistinguishing(const CoherentConfiguration& cfg, Point a, Point b) {
  const Color* ra = cfg.row(a);
  const Color* rb = cfg.row(b);
  std::size_t count = 0;
  // r(g, a) = r(g, b)  <=>  r(a, g) = r(b, g)
  for (std::size_t g = 0; g < cfg.degree(); ++g) count += (ra[g] == rb[g]);
  return count;
}

IndistinguishingNumbers finish(const CoherentConfiguration& cfg, std::vector<std::size_t> per_color) {
  IndistinguishingNumbers out;
  for (Color s = 0; s < cfg.rank(); ++s) {
    const auto [a, b] = cfg.representative(s);
    const std::size_t direct = direct_indistinguishing(cfg, a, b);
    if (direct != per_color[s])
      throw IntegrityError("indistinguishing number of color " + std::to_string(s) + ": tensor gives " +
                           std::to_string(per_color[s]) + ", direct count " + std::to_string(direct));
    if (!cfg.is_reflexive(s)) out.overall = std::max(out.overall, per_color[s]);
  }
  out.per_color = std::move(per_color);
  return out;
}

}  // namespace

IndistinguishingNumbers indistinguishing_number(const CoherentConfiguration& cfg) {
  // c(s) from the representative profile: sum over keys (r, r*) of the multiplicity
  std::vector<std::size_t> per(cfg.rank(), 0);
  ProfileBuilder builder(cfg);
  for (Color s = 0; s < cfg.rank(); ++s) {
    const auto [a, b] = cfg.representative(s);
    for (const auto& [k, c] : builder.profile(a, b).entries)
      if (key_second(k) == cfg.transpose(key_first(k))) per[s] += c;
  }
  return finish(cfg, std::move(per));
}

IndistinguishingNumbers indistinguishing_number(const CoherentConfiguration& cfg,
                                                const IntersectionTensor& tensor) {
  std::vector<std::size_t> per(cfg.rank(), 0);
  for (Color s = 0; s < cfg.rank(); ++s)
    for (const auto& e : tensor.row(s))
      if (e.s == cfg.transpose(e.r)) per[s] += e.count;
  return finish(cfg, std::move(per));
}

PseudocyclicResult is_pseudocyclic(const CoherentConfiguration& cfg) {
  if (!cfg.is_homogeneous()) throw UsageError("pseudocyclicity is defined for homogeneous configurations");
  PseudocyclicResult out;
  if (cfg.rank() == 1) {  // degree 1: vacuous
    out.pseudocyclic = true;
    return out;
  }
  std::size_t k = 0;
  for (Color s = 0; s < cfg.rank(); ++s) {
    if (cfg.is_reflexive(s)) continue;
    if (k == 0) k = cfg.valency(s);
    if (cfg.valency(s) != k) return out;
  }
  out.valency = k;
  const auto c = indistinguishing_number(cfg);
  for (Color s = 0; s < cfg.rank(); ++s)
    if (!cfg.is_reflexive(s) && c.per_color[s] + 1 != k) return out;
  out.pseudocyclic = true;
  return out;
}

bool is_regular_point(const CoherentConfiguration& cfg, Point alpha) {
  std::vector<bool> seen(cfg.rank(), false);
  const Color* r = cfg.row(alpha);
  for (std::size_t b = 0; b < cfg.degree(); ++b) {
    if (seen[r[b]]) return false;
    seen[r[b]] = true;
  }
  return true;
}

PartlyRegularResult partly_regular(const CoherentConfiguration& cfg) {
  PartlyRegularResult out;
  for (Point a = 0; a < cfg.degree(); ++a)
    if (is_regular_point(cfg, a)) out.regular_points.push_back(a);
  out.partly_regular = !out.regular_points.empty();
  return out;
}

CoherentConfiguration restriction(const CoherentConfiguration& cfg, std::span<const Point> points) {
  const std::size_t n = cfg.degree();
  std::vector<bool> in(n, false);
  for (Point p : points) {
    if (p >= n) throw UsageError("restriction point out of range");
    in[p] = true;
  }
  for (const auto& fiber : cfg.fibers()) {
    const bool first = in[fiber.front()];
    for (Point p : fiber)
      if (in[p] != first) throw UsageError("restriction set is not a union of fibers");
  }
  std::vector<Point> pts;
  for (Point p = 0; p < n; ++p)
    if (in[p]) pts.push_back(p);
  if (pts.empty()) throw UsageError("restriction to the empty set");
  const std::size_t m = pts.size();
  std::vector<Color> cells(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) cells[i * m + j] = cfg.color(pts[i], pts[j]);
  return CoherentConfiguration(ColorMatrix(m, std::move(cells)));
}

CoherentConfiguration restriction_to_fiber(const CoherentConfiguration& cfg, std::uint32_t fiber) {
  if (fiber >= cfg.fibers().size()) throw UsageError("fiber index out of range");
  return restriction(cfg, cfg.fibers()[fiber]);
}

std::vector<Color> find_matchings(const CoherentConfiguration& cfg, std::uint32_t delta, std::uint32_t gamma) {
  if (delta >= cfg.fibers().size() || gamma >= cfg.fibers().size())
    throw UsageError("fiber index out of range");
  std::vector<Color> out;
  // colors in Delta x Gamma all occur in the row of any point of Delta
  const Point a = cfg.fibers()[delta].front();
  std::vector<bool> seen(cfg.rank(), false);
  for (Point b : cfg.fibers()[gamma]) {
    const Color s = cfg.color(a, b);
    if (seen[s]) continue;
    seen[s] = true;
    if (cfg.valency(s) == 1 && cfg.valency(cfg.transpose(s)) == 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Relation dot_product(const CoherentConfiguration& cfg, Color first, Color second) {
  if (first >= cfg.rank() || second >= cfg.rank()) throw UsageError("color out of range");
  if (cfg.target_fiber(first) != cfg.source_fiber(second))
    throw UsageError("dot product of colors with incompatible fibers");
  const std::size_t n = cfg.degree();
  std::vector<bool> mark(n * n, false);
  std::size_t cells = 0;
  for (Point a : cfg.fibers()[cfg.source_fiber(first)]) {
    const Color* ra = cfg.row(a);
    for (Point g = 0; g < n; ++g) {
      if (ra[g] != first) continue;
      const Color* rg = cfg.row(g);
      for (Point b = 0; b < n; ++b)
        if (rg[b] == second && !mark[a * n + b]) {
          mark[a * n + b] = true;
          ++cells;
        }
    }
  }
  Relation rel;
  rel.cells = cells;
  std::vector<bool> seen(cfg.rank(), false);
  for (std::size_t i = 0; i < mark.size(); ++i)
    if (mark[i] && !seen[cfg.matrix().cells[i]]) {
      seen[cfg.matrix().cells[i]] = true;
      rel.colors.push_back(cfg.matrix().cells[i]);
    }
  std::sort(rel.colors.begin(), rel.colors.end());
  std::size_t covered = 0;
  for (Color c : rel.colors) covered += cfg.size(c);
  if (covered != cells) throw IntegrityError("dot product is not a union of colors");
  const auto is_matching = [&](Color s) { return cfg.valency(s) == 1 && cfg.valency(cfg.transpose(s)) == 1; };
  if ((is_matching(first) || is_matching(second)) && cells > 0 && rel.colors.size() != 1)
    throw IntegrityError("dot product with a matching is not a single color");
  return rel;
}

std::uint32_t m_t(const CoherentConfiguration& cfg, Color t) {
  if (t >= cfg.rank()) throw UsageError("color out of range");
  if (cfg.is_reflexive(t)) throw UsageError("m_t is defined for irreflexive colors");
  ProfileBuilder builder(cfg);
  const auto [a, b] = cfg.representative(t);
  std::uint32_t best = 0;
  for (const auto& [k, c] : builder.profile(a, b).entries) best = std::max(best, c);
  return best;
}

}  // namespace cohcfg
