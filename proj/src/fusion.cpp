#include "cohcfg/fusion.hpp"

#include <numeric>
#include <random>

#include "cohcfg/errors.hpp"
#include "cohcfg/permgroup.hpp"

namespace cohcfg {

ColorAction induced_color_action(const CoherentConfiguration& cfg, const Permutation& g) {
  const std::size_t n = cfg.degree();
  if (g.degree() != n) throw UsageError("permutation degree differs from configuration degree");
  ColorAction out;
  ColorPermutation perm(cfg.rank());
  for (Color s = 0; s < cfg.rank(); ++s) {
    const auto [a, b] = cfg.representative(s);
    perm[s] = cfg.color(g(a), g(b));
  }
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      if (cfg.color(g(a), g(b)) != perm[cfg.color(a, b)]) {
        out.witness = {a, b};
        out.reason = "cell (" + std::to_string(a) + "," + std::to_string(b) + ") of color " +
                     std::to_string(cfg.color(a, b)) + " maps to color " + std::to_string(cfg.color(g(a), g(b))) +
                     " instead of " + std::to_string(perm[cfg.color(a, b)]);
        return out;
      }
  // images are whole classes, so a repeated image means a class is split
  std::vector<bool> hit(cfg.rank(), false);
  for (Color s = 0; s < cfg.rank(); ++s) {
    if (hit[perm[s]]) {
      out.witness = cfg.representative(s);
      out.reason = "two colors map into color " + std::to_string(perm[s]);
      return out;
    }
    hit[perm[s]] = true;
  }
  out.permutation = std::move(perm);
  return out;
}

std::uint64_t color_permutation_order(const ColorPermutation& p) {
  return Permutation(p).order();
}

std::optional<std::string> algebraic_automorphism_violation(const CoherentConfiguration& cfg,
                                                            const IntersectionTensor& tensor,
                                                            const ColorPermutation& phi) {
  if (phi.size() != cfg.rank()) return "color permutation has wrong length";
  std::vector<bool> hit(phi.size(), false);
  for (Color s : phi) {
    if (s >= phi.size() || hit[s]) return "not a permutation of the colors";
    hit[s] = true;
  }
  for (Color s = 0; s < cfg.rank(); ++s)
    if (cfg.is_reflexive(s) != cfg.is_reflexive(phi[s]))
      return "color " + std::to_string(s) + " is reflexive but its image " + std::to_string(phi[s]) + " is not";
  for (Color t = 0; t < cfg.rank(); ++t) {
    const auto row = tensor.row(t);
    if (row.size() != tensor.row(phi[t]).size())
      return "support of c^t differs at t=" + std::to_string(t);
    for (const auto& e : row) {
      const std::uint32_t img = tensor.at(phi[e.r], phi[e.s], phi[t]);
      if (img != e.count)
        return "triple (r=" + std::to_string(e.r) + ",s=" + std::to_string(e.s) + ",t=" + std::to_string(t) +
               "): " + std::to_string(e.count) + " but image gives " + std::to_string(img);
    }
  }
  return std::nullopt;
}

Fusion algebraic_fusion(const CoherentConfiguration& cfg, std::span<const ColorPermutation> generators) {
  return algebraic_fusion(cfg, intersection_tensor(cfg), generators);
}

Fusion algebraic_fusion(const CoherentConfiguration& cfg, const IntersectionTensor& tensor,
                        std::span<const ColorPermutation> generators) {
  const std::size_t rank = cfg.rank();
  std::vector<Permutation> perms;
  for (const auto& phi : generators) {
    if (auto bad = algebraic_automorphism_violation(cfg, tensor, phi))
      throw UsageError("not an algebraic automorphism: " + *bad);
    perms.emplace_back(phi);
  }
  const GeneratedGroup phi_group(rank, perms);
  const auto ids = phi_group.orbit_ids();

  std::vector<Color> cells(cfg.matrix().cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = ids[cfg.matrix().cells[i]];
  ColorMatrix fused_matrix = canonical_relabel(ColorMatrix(cfg.degree(), std::move(cells)));
  const auto report = validate(fused_matrix, ValidationLevel::full);
  if (!report.pass)
    throw IntegrityError("fusion is not coherent: " + (report.failures.empty() ? "?" : report.failures.front()));

  Fusion out{CoherentConfiguration(fused_matrix), {}};
  out.map.generators.assign(generators.begin(), generators.end());
  out.map.group_order = phi_group.order();
  out.map.fused_color.resize(rank);
  out.map.orbits.resize(out.fused.rank());
  for (Color s = 0; s < rank; ++s) {
    const auto [a, b] = cfg.representative(s);
    const Color f = out.fused.color(a, b);
    out.map.fused_color[s] = f;
    out.map.orbits[f].push_back(s);
  }
  return out;
}

std::vector<std::string> fusion_bound_violations(const CoherentConfiguration& cfg, const IntersectionTensor& tensor,
                                                 const Fusion& fusion, const IntersectionTensor& fused_tensor,
                                                 std::size_t samples, std::uint64_t seed) {
  std::vector<Color> irreflexive;
  for (Color t = 0; t < cfg.rank(); ++t)
    if (!cfg.is_reflexive(t)) irreflexive.push_back(t);
  std::vector<std::string> out;
  if (irreflexive.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> any(0, static_cast<Color>(cfg.rank() - 1));
  std::uniform_int_distribution<std::size_t> pick(0, irreflexive.size() - 1);
  const std::uint64_t phi2 = fusion.map.group_order * fusion.map.group_order;
  const auto& f = fusion.map.fused_color;
  for (std::size_t i = 0; i < samples; ++i) {
    const Color r = any(rng), s = any(rng), t = irreflexive[pick(rng)];
    const std::uint64_t lhs = fused_tensor.at(f[r], f[s], f[t]);
    const std::uint64_t rhs = tensor.max_in_row(t) * phi2;
    if (lhs > rhs)
      out.push_back("(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + "): " +
                    std::to_string(lhs) + " > " + std::to_string(rhs));
  }
  return out;
}

}  // namespace cohcfg
