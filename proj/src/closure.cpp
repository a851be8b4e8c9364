#include "cohcfg/closure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t v) { return splitmix64(seed ^ (v + 0x632be59bd9b4e019ULL)); }

// Multiset of up to `capacity` keys with O(n) exact comparison against
// another key sequence. Reused across groups to avoid reallocation.
class KeyMultiset {
 public:
  explicit KeyMultiset(std::size_t capacity) {
    std::size_t cap = 4;
    while (cap < 2 * capacity) cap <<= 1;
    mask_ = cap - 1;
    keys_.assign(cap, kEmpty);
    counts_.assign(cap, 0);
  }

  void assign(std::span<const std::uint64_t> keys) {
    for (std::size_t h : used_) {
      keys_[h] = kEmpty;
      counts_[h] = 0;
    }
    used_.clear();
    for (std::uint64_t k : keys) {
      std::size_t h = slot(k);
      while (keys_[h] != kEmpty && keys_[h] != k) h = (h + 1) & mask_;
      if (keys_[h] == kEmpty) {
        keys_[h] = k;
        used_.push_back(h);
      }
      ++counts_[h];
    }
  }

  bool equals(std::span<const std::uint64_t> keys) {
    std::size_t done = 0;
    bool ok = true;
    for (; done < keys.size(); ++done) {
      const std::size_t h = find(keys[done]);
      if (h == kNone) {
        ok = false;
        break;
      }
      if (--counts_[h] < 0) {
        ++done;
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; i < done; ++i) ++counts_[find(keys[i])];
    return ok;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static constexpr std::size_t kNone = ~std::size_t{0};

  std::size_t slot(std::uint64_t k) const { return static_cast<std::size_t>(splitmix64(k)) & mask_; }
  std::size_t find(std::uint64_t k) const {
    std::size_t h = slot(k);
    while (keys_[h] != k) {
      if (keys_[h] == kEmpty) return kNone;
      h = (h + 1) & mask_;
    }
    return h;
  }

  std::size_t mask_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> counts_;
  std::vector<std::size_t> used_;
};

// Initial pass: separate the diagonal and make the coloring
// transpose-compatible. Ids are ranks of (diagonal, c(a,b), c(b,a)).
std::size_t normalize(std::size_t n, std::span<const Color> in, std::vector<Color>& out, std::uint64_t& fp) {
  const std::size_t N = n * n;
  struct Key {
    std::uint32_t diag;
    Color fwd, back;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> keys(N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) keys[a * n + b] = {a == b ? 0u : 1u, in[a * n + b], in[b * n + a]};
  std::vector<std::uint32_t> order(N);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return keys[x] != keys[y] ? keys[x] < keys[y] : x < y;
  });
  out.assign(N, 0);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) {
      ++classes;
      const Key& k = keys[order[i]];
      fp = combine(fp, (std::uint64_t{k.diag} << 63) ^ (std::uint64_t{k.fwd} << 32) ^ k.back);
    }
    out[order[i]] = static_cast<Color>(classes - 1);
  }
  fp = combine(fp, classes);
  return classes;
}

class Refiner {
 public:
  Refiner(std::size_t n, std::vector<Color> cells, std::size_t classes)
      : n_(n), cur_(std::move(cells)), classes_(classes), trans_(n * n), hash_(n * n), keys_(n), other_(n),
        multiset_(n) {}

  // One round; returns the new class count.
  std::size_t round(std::uint64_t& fp) {
    const std::size_t n = n_, N = n * n;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) trans_[b * n + a] = cur_[a * n + b];
    const std::uint64_t R = classes_;
    for (std::size_t a = 0; a < n; ++a) {
      const Color* ra = cur_.data() + a * n;
      for (std::size_t b = 0; b < n; ++b) {
        // column b of the matrix, i.e. c(g, b) over g
        const Color* cb = trans_.data() + b * n;
        std::uint64_t h = 0;
        for (std::size_t g = 0; g < n; ++g) h += splitmix64(ra[g] * R + cb[g]);
        hash_[a * n + b] = h;
      }
    }
    std::vector<std::uint32_t> order(N);
    std::iota(order.begin(), order.end(), 0u);
    auto key_of = [&](std::uint32_t c) {
      const std::size_t a = c / n, b = c % n;
      return std::tuple{cur_[c], cur_[b * n + a], hash_[c]};
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      const auto kx = key_of(x), ky = key_of(y);
      return kx != ky ? kx < ky : x < y;
    });

    std::vector<Color> next(N);
    std::size_t classes = 0;
    for (std::size_t i = 0; i < N;) {
      std::size_t j = i + 1;
      while (j < N && key_of(order[j]) == key_of(order[i])) ++j;
      const auto [c0, c1, h] = key_of(order[i]);
      fp = combine(fp, (std::uint64_t{c0} << 32) ^ c1);
      fp = combine(fp, h);
      fp = combine(fp, j - i);
      if (j - i == 1) {
        next[order[i]] = static_cast<Color>(classes++);
      } else {
        classes = assign_group(std::span<const std::uint32_t>(order.data() + i, j - i), next, classes, fp);
      }
      i = j;
    }
    cur_ = std::move(next);
    classes_ = classes;
    return classes;
  }

  std::vector<Color>& cells() { return cur_; }
  std::size_t classes() const { return classes_; }

 private:
  void fill_keys(std::uint32_t cell, std::vector<std::uint64_t>& out) const {
    const std::size_t n = n_;
    const Color* ra = cur_.data() + (cell / n) * n;
    const Color* cb = trans_.data() + (cell % n) * n;
    const std::uint64_t R = classes_;
    for (std::size_t g = 0; g < n; ++g) out[g] = ra[g] * R + cb[g];
  }

  // Members of a hash group that really share one multiset get one id.
  // Genuine collisions are split and ordered by the sorted multiset.
  std::size_t assign_group(std::span<const std::uint32_t> members, std::vector<Color>& next, std::size_t classes,
                           std::uint64_t& fp) {
    std::vector<std::uint32_t> pending(members.begin(), members.end());
    std::vector<std::vector<std::uint32_t>> parts;
    while (!pending.empty()) {
      fill_keys(pending[0], keys_);
      multiset_.assign(keys_);
      std::vector<std::uint32_t> same{pending[0]}, rest;
      for (std::size_t i = 1; i < pending.size(); ++i) {
        fill_keys(pending[i], other_);
        (multiset_.equals(other_) ? same : rest).push_back(pending[i]);
      }
      parts.push_back(std::move(same));
      pending = std::move(rest);
    }
    if (parts.size() > 1) {
      std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> sigs;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        fill_keys(parts[p][0], keys_);
        std::vector<std::uint64_t> sig = keys_;
        std::sort(sig.begin(), sig.end());
        sigs.emplace_back(std::move(sig), p);
      }
      std::sort(sigs.begin(), sigs.end());
      std::vector<std::vector<std::uint32_t>> ordered;
      for (auto& [sig, p] : sigs) {
        for (std::uint64_t k : sig) fp = combine(fp, k);
        ordered.push_back(std::move(parts[p]));
      }
      parts = std::move(ordered);
    }
    for (const auto& part : parts) {
      for (std::uint32_t c : part) next[c] = static_cast<Color>(classes);
      ++classes;
    }
    return classes;
  }

  std::size_t n_;
  std::vector<Color> cur_;
  std::size_t classes_;
  std::vector<Color> trans_;
  std::vector<std::uint64_t> hash_;
  std::vector<std::uint64_t> keys_, other_;
  KeyMultiset multiset_;
};

}  // namespace

ColorPartition::ColorPartition(std::size_t degree, std::vector<Color> values) : n(degree), cells(std::move(values)) {
  if (cells.size() != n * n) throw UsageError("partition must have n^2 cells");
}

Refinement refine(std::size_t n, std::span<const Color> initial) {
  if (initial.size() != n * n) throw UsageError("partition must have n^2 cells");
  Refinement out;
  if (n == 0) return out;
  std::vector<Color> cells;
  std::uint64_t fp = combine(0, n);
  std::size_t classes = normalize(n, initial, cells, fp);
  Refiner refiner(n, std::move(cells), classes);
  for (;;) {
    ++out.rounds;
    const std::size_t before = refiner.classes();
    if (refiner.round(fp) == before) break;
  }
  out.classes = refiner.classes();
  out.cells = std::move(refiner.cells());
  out.fingerprint = fp;
  return out;
}

CoherentConfiguration coherent_closure(const ColorPartition& initial) {
  const Refinement r = refine(initial.n, initial.cells);
  return CoherentConfiguration(canonical_relabel(ColorMatrix(initial.n, r.cells)));
}

CoherentConfiguration coherent_closure(const ColorMatrix& initial) {
  return coherent_closure(ColorPartition(initial));
}

CoherentConfiguration extend_points(const CoherentConfiguration& cfg, std::span<const Point> points) {
  const std::size_t n = cfg.degree();
  std::vector<bool> seen(n, false);
  std::vector<Color> cells = cfg.matrix().cells;
  Color fresh = static_cast<Color>(cfg.rank());
  for (Point p : points) {
    if (p >= n) throw UsageError("point " + std::to_string(p) + " out of range");
    if (seen[p]) throw UsageError("point " + std::to_string(p) + " listed twice");
    seen[p] = true;
    cells[static_cast<std::size_t>(p) * n + p] = fresh++;
  }
  if (points.empty()) return cfg;
  return coherent_closure(ColorPartition(n, std::move(cells)));
}

CoherentConfiguration two_extension(const CoherentConfiguration& cfg) {
  const std::size_t n = cfg.degree();
  if (n > kTwoExtensionMaxDegree)
    throw ResourceError("two_extension: degree " + std::to_string(n) + " exceeds guard " +
                        std::to_string(kTwoExtensionMaxDegree));
  const std::size_t N = n * n;
  const std::uint64_t R = cfg.rank();
  std::vector<std::uint64_t> raw(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const Point a1 = x / n, a2 = x % n, b1 = y / n, b2 = y % n;
      const bool diag_point = x == y && a1 == a2;
      raw[x * N + y] = (cfg.color(a1, b1) * R + cfg.color(a2, b2)) * 2 + (diag_point ? 1 : 0);
    }
  // compact to dense ids before refining
  std::vector<std::uint64_t> values(raw);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Color> cells(N * N);
  for (std::size_t i = 0; i < raw.size(); ++i)
    cells[i] = static_cast<Color>(std::lower_bound(values.begin(), values.end(), raw[i]) - values.begin());
  return coherent_closure(ColorPartition(N, std::move(cells)));
}

}  // namespace cohcfg
