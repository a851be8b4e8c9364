#include "cohcfg/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "cohcfg/errors.hpp"

namespace cohcfg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw UsageError("image table is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  return Permutation(std::move(id), Unchecked{});
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw UsageError("composing permutations of different degree");
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next.images_[images_[i]];
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (std::size_t len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

GeneratedGroup::GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                               std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw UsageError("generator degree mismatch");
  for (Point b : base_prefix) {
    if (b >= degree_) throw UsageError("base point out of range");
    add_level(b);
  }
  for (const auto& g : generators_) {
    auto [res, lvl] = sift(g, 0);
    if (!res.is_identity()) add_strong(std::move(res));
  }
  run_schreier_sims();
}

void GeneratedGroup::add_level(Point base_point) {
  Level lv;
  lv.base_point = base_point;
  lv.orbit = {base_point};
  lv.index_of.assign(degree_, -1);
  lv.index_of[base_point] = 0;
  lv.transversal = {Permutation::identity(degree_)};
  lv.transversal_inv = {Permutation::identity(degree_)};
  lv.checked = {{}};
  const std::size_t depth = levels_.size();
  for (std::size_t s = 0; s < strong_.size(); ++s) {
    bool fixes = true;
    for (std::size_t k = 0; k < depth && fixes; ++k)
      fixes = strong_[s](levels_[k].base_point) == levels_[k].base_point;
    if (fixes) lv.gens.push_back(s);
  }
  levels_.push_back(std::move(lv));
  grow_orbit(levels_.back());
}

void GeneratedGroup::add_strong(Permutation g) {
  const std::size_t idx = strong_.size();
  strong_.push_back(std::move(g));
  const Permutation& h = strong_.back();
  std::size_t k = 0;
  for (; k < levels_.size(); ++k) {
    levels_[k].gens.push_back(idx);
    grow_orbit(levels_[k]);
    if (h(levels_[k].base_point) != levels_[k].base_point) break;
  }
  if (k == levels_.size()) {
    Point moved = 0;
    while (moved < degree_ && h(moved) == moved) ++moved;
    if (moved == degree_) throw IntegrityError("identity added as strong generator");
    add_level(moved);
  }
}

void GeneratedGroup::grow_orbit(Level& lv) {
  for (auto& row : lv.checked) row.resize(lv.gens.size(), false);
  // apply all generators to all orbit points; new points inherit a transversal
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
      const Permutation& s = strong_[lv.gens[gi]];
      const Point y = s(lv.orbit[i]);
      if (lv.index_of[y] >= 0) continue;
      lv.index_of[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      Permutation u = lv.transversal[i].then(s);
      lv.transversal_inv.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
      lv.checked.emplace_back(lv.gens.size(), false);
    }
  }
}

std::pair<Permutation, std::size_t> GeneratedGroup::sift(Permutation g, std::size_t start) const {
  for (std::size_t k = start; k < levels_.size(); ++k) {
    const Level& lv = levels_[k];
    const std::int32_t idx = lv.index_of[g(lv.base_point)];
    if (idx < 0) return {std::move(g), k};
    g = g.then(lv.transversal_inv[static_cast<std::size_t>(idx)]);
  }
  return {std::move(g), levels_.size()};
}

void GeneratedGroup::run_schreier_sims() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    Level* lv = &levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; !added && oi < lv->orbit.size(); ++oi) {
      for (std::size_t gi = 0; !added && gi < lv->gens.size(); ++gi) {
        if (lv->checked[oi][gi]) continue;
        lv->checked[oi][gi] = true;
        const Permutation& s = strong_[lv->gens[gi]];
        const Point y = s(lv->orbit[oi]);
        const auto yi = static_cast<std::size_t>(lv->index_of[y]);
        Permutation h = lv->transversal[oi].then(s).then(lv->transversal_inv[yi]);
        auto [res, stop] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
        if (!res.is_identity()) {
          add_strong(std::move(res));
          i = static_cast<std::ptrdiff_t>(std::min(stop, levels_.size() - 1));
          added = true;
        }
      }
    }
    if (!added) --i;
  }
}

std::vector<Point> GeneratedGroup::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::uint64_t GeneratedGroup::order() const {
  std::uint64_t ord = 1;
  for (const auto& lv : levels_) {
    const std::uint64_t len = lv.orbit.size();
    if (ord > UINT64_MAX / len) throw ResourceError("group order overflows 64 bits");
    ord *= len;
  }
  return ord;
}

std::vector<std::size_t> GeneratedGroup::fundamental_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

bool GeneratedGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [res, stop] = sift(g, 0);
  return stop == levels_.size() && res.is_identity();
}

GeneratedGroup GeneratedGroup::point_stabilizer(Point alpha) const {
  const Point pts[1] = {alpha};
  return pointwise_stabilizer(pts);
}

GeneratedGroup GeneratedGroup::pointwise_stabilizer(std::span<const Point> points) const {
  for (Point p : points)
    if (p >= degree_) throw UsageError("point out of range");
  std::vector<Point> prefix(points.begin(), points.end());
  GeneratedGroup chain(degree_, generators_, prefix);
  std::set<Permutation> gens;
  if (chain.levels_.size() > prefix.size()) {
    for (std::size_t s : chain.levels_[prefix.size()].gens) gens.insert(chain.strong_[s]);
  }
  return GeneratedGroup(degree_, std::vector<Permutation>(gens.begin(), gens.end()));
}

std::vector<Point> GeneratedGroup::orbit(Point alpha) const {
  if (alpha >= degree_) throw UsageError("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{alpha};
  seen[alpha] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

std::vector<std::uint32_t> GeneratedGroup::orbit_ids() const {
  std::vector<std::uint32_t> id(degree_, UINT32_MAX);
  std::uint32_t next = 0;
  for (Point a = 0; a < degree_; ++a) {
    if (id[a] != UINT32_MAX) continue;
    for (Point x : orbit(a)) id[x] = next;
    ++next;
  }
  return id;
}

std::size_t GeneratedGroup::num_orbits() const {
  const auto ids = orbit_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<std::pair<Point, Point>> GeneratedGroup::orbit_of_pair(Point alpha, Point beta) const {
  if (alpha >= degree_ || beta >= degree_) throw UsageError("point out of range");
  std::vector<bool> seen(degree_ * degree_, false);
  std::vector<std::pair<Point, Point>> out{{alpha, beta}};
  seen[static_cast<std::size_t>(alpha) * degree_ + beta] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      const Point a = g(out[i].first), b = g(out[i].second);
      const std::size_t cell = static_cast<std::size_t>(a) * degree_ + b;
      if (!seen[cell]) {
        seen[cell] = true;
        out.emplace_back(a, b);
      }
    }
  return out;
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t limit) const {
  if (order() > limit) throw ResourceError("group too large to enumerate");
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::deque<Permutation> queue{Permutation::identity(degree_)};
  while (!queue.empty()) {
    Permutation g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators_) {
      Permutation h = g.then(s);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cohcfg
