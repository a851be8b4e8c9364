#include "cohcfg/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "cohcfg/closure.hpp"
#include "cohcfg/errors.hpp"
#include "cohcfg/structure.hpp"

namespace cohcfg {

std::string to_string(AutMethod m) {
  switch (m) {
    case AutMethod::partly_regular_fastpath:
      return "partly-regular-fastpath";
    case AutMethod::individualization_refinement:
      return "individualization-refinement";
    case AutMethod::known_group_confirmed:
      return "known-group-confirmed";
  }
  return "?";
}

namespace {

constexpr Point kNoPoint = std::numeric_limits<Point>::max();

bool maps_cells(const ColorMatrix& src, const ColorMatrix& dst, const std::vector<Point>& f) {
  const std::size_t n = src.n;
  for (Point a = 0; a < n; ++a) {
    const Color* rs = src.cells.data() + static_cast<std::size_t>(a) * n;
    const Color* rd = dst.cells.data() + static_cast<std::size_t>(f[a]) * n;
    for (Point b = 0; b < n; ++b)
      if (rd[f[b]] != rs[b]) return false;
  }
  return true;
}

// The map determined by alpha -> beta when alpha is a regular point of src:
// gamma goes to the unique delta with dst(beta, delta) = src(alpha, gamma).
std::optional<Permutation> map_from_regular(const ColorMatrix& src, const ColorMatrix& dst, Point alpha, Point beta,
                                            std::vector<Point>& slot) {
  const std::size_t n = src.n;
  const Color* rd = dst.cells.data() + static_cast<std::size_t>(beta) * n;
  for (Point d = 0; d < n; ++d) {
    if (rd[d] >= slot.size()) return std::nullopt;
    slot[rd[d]] = kNoPoint;
  }
  for (Point d = 0; d < n; ++d) {
    if (slot[rd[d]] != kNoPoint) return std::nullopt;  // color repeated in row beta
    slot[rd[d]] = d;
  }
  std::vector<Point> f(n);
  std::vector<bool> hit(n, false);
  const Color* rs = src.cells.data() + static_cast<std::size_t>(alpha) * n;
  for (Point g = 0; g < n; ++g) {
    const Color c = rs[g];
    if (c >= slot.size() || slot[c] == kNoPoint) return std::nullopt;
    f[g] = slot[c];
    if (hit[f[g]]) return std::nullopt;
    hit[f[g]] = true;
  }
  for (Point d = 0; d < n; ++d) slot[rd[d]] = kNoPoint;
  if (!maps_cells(src, dst, f)) return std::nullopt;
  return Permutation(std::move(f));
}

struct Node {
  std::vector<Color> cells;
  std::size_t classes = 0;
  std::uint64_t fingerprint = 0;

  bool compatible(const Node& o) const { return classes == o.classes && fingerprint == o.fingerprint; }
};

Node make_node(std::size_t n, std::span<const Color> cells) {
  Refinement r = refine(n, cells);
  return {std::move(r.cells), r.classes, r.fingerprint};
}

Node individualize(const Node& node, std::size_t n, Point v) {
  std::vector<Color> cells = node.cells;
  cells[static_cast<std::size_t>(v) * n + v] = static_cast<Color>(node.classes);
  return make_node(n, cells);
}

Color diag_color(const Node& node, std::size_t n, Point p) { return node.cells[static_cast<std::size_t>(p) * n + p]; }

// Diagonal color of the largest non-singleton point cell (ties: least id).
std::optional<Color> target_cell(const Node& node, std::size_t n) {
  std::vector<std::size_t> count(node.classes, 0);
  for (Point p = 0; p < n; ++p) ++count[diag_color(node, n, p)];
  std::optional<Color> best;
  for (Color c = 0; c < node.classes; ++c)
    if (count[c] > 1 && (!best || count[c] > count[*best])) best = c;
  return best;
}

std::vector<Point> cell_points(const Node& node, std::size_t n, Color c) {
  std::vector<Point> out;
  for (Point p = 0; p < n; ++p)
    if (diag_color(node, n, p) == c) out.push_back(p);
  return out;
}

// Base path of the search tree in the source plus leaf-matching DFS in the
// destination.
class SearchTree {
 public:
  SearchTree(const ColorMatrix& src, const ColorMatrix& dst) : n_(src.n), src_(src), dst_(dst) {
    path_.push_back(make_node(n_, src.cells));
    while (auto c = target_cell(path_.back(), n_)) {
      const Point v = cell_points(path_.back(), n_, *c).front();
      cell_.push_back(*c);
      base_.push_back(v);
      path_.push_back(individualize(path_.back(), n_, v));
    }
    for (Point p = 0; p < n_; ++p) leaf_color_.push_back(diag_color(path_.back(), n_, p));
  }

  const std::vector<Point>& base() const { return base_; }
  const Node& node(std::size_t level) const { return path_[level]; }
  Color cell(std::size_t level) const { return cell_[level]; }

  // A mapping src -> dst following `node` (which must be compatible with
  // path_[level]) down to a leaf.
  std::optional<Permutation> descend(const Node& node, std::size_t level) {
    if (level == base_.size()) return leaf_map(node);
    for (Point w : cell_points(node, n_, cell_[level])) {
      Node child = individualize(node, n_, w);
      if (!child.compatible(path_[level + 1])) continue;
      if (auto f = descend(child, level + 1)) return f;
    }
    return std::nullopt;
  }

  // Same, with the branch at `level` fixed to w.
  std::optional<Permutation> descend_via(const Node& node, std::size_t level, Point w) {
    Node child = individualize(node, n_, w);
    if (!child.compatible(path_[level + 1])) return std::nullopt;
    return descend(child, level + 1);
  }

 private:
  std::optional<Permutation> leaf_map(const Node& leaf) {
    std::vector<Point> by_color(leaf.classes, kNoPoint);
    for (Point p = 0; p < n_; ++p) by_color[diag_color(leaf, n_, p)] = p;
    std::vector<Point> f(n_);
    for (Point p = 0; p < n_; ++p) {
      if (leaf_color_[p] >= by_color.size() || by_color[leaf_color_[p]] == kNoPoint) return std::nullopt;
      f[p] = by_color[leaf_color_[p]];
    }
    if (!maps_cells(src_, dst_, f)) return std::nullopt;
    return Permutation(std::move(f));
  }

  std::size_t n_;
  const ColorMatrix& src_;
  const ColorMatrix& dst_;
  std::vector<Node> path_;
  std::vector<Color> cell_;
  std::vector<Point> base_;
  std::vector<Color> leaf_color_;
};

std::vector<Point> stabilizer_orbit(std::size_t n, const std::vector<Permutation>& gens,
                                    std::span<const Point> prefix, Point v) {
  const GeneratedGroup g(n, gens, std::vector<Point>(prefix.begin(), prefix.end()));
  return g.pointwise_stabilizer(prefix).orbit(v);
}

AutGroup fast_path(const CoherentConfiguration& cfg, Point alpha) {
  const std::size_t n = cfg.degree();
  const ColorMatrix& m = cfg.matrix();
  std::vector<Point> slot(cfg.rank(), kNoPoint);
  AutGroup out;
  out.method = AutMethod::partly_regular_fastpath;
  std::uint64_t count = 0;
  GeneratedGroup group(n, {});
  for (Point beta : cfg.fibers()[cfg.fiber_of(alpha)]) {
    auto f = map_from_regular(m, m, alpha, beta, slot);
    if (!f) continue;
    ++count;
    if (!group.contains(*f)) {
      out.generators.push_back(*f);
      group = GeneratedGroup(n, out.generators);
    }
  }
  if (group.order() != count)
    throw IntegrityError("fast path: " + std::to_string(count) + " automorphisms found but generated group has order " +
                         std::to_string(group.order()));
  out.order = count;
  return out;
}

}  // namespace

AutGroup automorphism_group(const CoherentConfiguration& cfg, const std::vector<Permutation>& known) {
  const std::size_t n = cfg.degree();
  for (const auto& g : known)
    if (g.degree() != n || !cfg.is_automorphism(g)) throw UsageError("seed generator is not an automorphism");
  const auto pr = partly_regular(cfg);
  if (pr.partly_regular) return fast_path(cfg, pr.regular_points.front());
  if (n > kGenericSearchMaxDegree)
    throw ResourceError("automorphism search: degree " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kGenericSearchMaxDegree) + " and no regular point exists");

  SearchTree tree(cfg.matrix(), cfg.matrix());
  const auto& base = tree.base();
  std::vector<Permutation> gens = known;
  for (std::size_t level = base.size(); level-- > 0;) {
    const std::span<const Point> prefix(base.data(), level);
    std::vector<Point> orbit = stabilizer_orbit(n, gens, prefix, base[level]);
    for (Point w : cell_points(tree.node(level), n, tree.cell(level))) {
      if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
      if (auto f = tree.descend_via(tree.node(level), level, w)) {
        gens.push_back(*f);
        orbit = stabilizer_orbit(n, gens, prefix, base[level]);
      }
    }
  }
  AutGroup out;
  const GeneratedGroup group(n, gens, base);
  out.order = group.order();
  // keep a generating set without the redundant seeds
  out.generators = gens;
  out.method = AutMethod::individualization_refinement;
  if (!known.empty() && GeneratedGroup(n, known).order() == out.order) out.method = AutMethod::known_group_confirmed;
  return out;
}

std::optional<Permutation> find_isomorphism(const ColorMatrix& src, const ColorMatrix& dst) {
  if (src.n != dst.n) return std::nullopt;
  const std::size_t n = src.n;
  if (n == 0) return Permutation(std::vector<Point>{});
  {
    std::vector<Color> a = src.cells, b = dst.cells;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // regular point of src: at most n candidate maps
  const Color top = *std::max_element(src.cells.begin(), src.cells.end());
  for (Point alpha = 0; alpha < n; ++alpha) {
    std::vector<bool> seen(top + 1, false);
    bool regular = true;
    for (Point g = 0; g < n && regular; ++g) {
      const Color c = src.at(alpha, g);
      regular = !seen[c];
      seen[c] = true;
    }
    if (!regular) continue;
    std::vector<Point> slot(top + 1, kNoPoint);
    for (Point beta = 0; beta < n; ++beta)
      if (auto f = map_from_regular(src, dst, alpha, beta, slot)) return f;
    return std::nullopt;
  }
  if (n > kGenericSearchMaxDegree)
    throw ResourceError("isomorphism search: degree " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kGenericSearchMaxDegree));
  SearchTree tree(src, dst);
  const Node root = make_node(n, dst.cells);
  if (!root.compatible(tree.node(0))) return std::nullopt;
  return tree.descend(root, 0);
}

std::vector<ColorPermutation> algebraic_automorphisms(const CoherentConfiguration& cfg,
                                                      const IntersectionTensor& tensor) {
  const std::size_t r = cfg.rank();
  if (r > kAlgebraicSearchMaxRank)
    throw ResourceError("algebraic automorphism enumeration: rank " + std::to_string(r) + " exceeds guard " +
                        std::to_string(kAlgebraicSearchMaxRank));
  constexpr Color kUnset = std::numeric_limits<Color>::max();
  ColorPermutation phi(r, kUnset);
  std::vector<bool> used(r, false);
  std::vector<ColorPermutation> out;
  const auto consistent = [&](Color c) {
    for (Color a = 0; a <= c; ++a)
      for (Color b = 0; b <= c; ++b)
        for (Color t = 0; t <= c; ++t) {
          if (a != c && b != c && t != c) continue;
          if (tensor.at(a, b, t) != tensor.at(phi[a], phi[b], phi[t])) return false;
        }
    return true;
  };
  std::function<void(Color)> search = [&](Color c) {
    if (c == r) {
      out.push_back(phi);
      return;
    }
    for (Color img = 0; img < r; ++img) {
      if (used[img] || cfg.is_reflexive(img) != cfg.is_reflexive(c) || cfg.valency(img) != cfg.valency(c) ||
          cfg.size(img) != cfg.size(c))
        continue;
      const Color ct = cfg.transpose(c);
      if (ct < c && phi[ct] != cfg.transpose(img)) continue;
      if (ct == c && cfg.transpose(img) != img) continue;
      phi[c] = img;
      used[img] = true;
      if (consistent(c)) search(c + 1);
      used[img] = false;
      phi[c] = kUnset;
    }
  };
  search(0);
  return out;
}

std::optional<Permutation> inducing_bijection(const CoherentConfiguration& cfg, const ColorPermutation& phi) {
  if (phi.size() != cfg.rank()) throw UsageError("color permutation has wrong length");
  ColorMatrix src = cfg.matrix();
  for (Color& c : src.cells) c = phi[c];
  return find_isomorphism(src, cfg.matrix());
}

}  // namespace cohcfg
