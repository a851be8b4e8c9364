#include "cohcfg/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <unordered_map>

#include "cohcfg/errors.hpp"
#include "cohcfg/profile.hpp"

namespace cohcfg {

IntersectionTensor::IntersectionTensor(std::size_t degree, std::vector<std::size_t> valencies,
                                       std::vector<std::vector<Entry>> rows)
    : degree_(degree), valencies_(std::move(valencies)), rows_(std::move(rows)) {
  const std::size_t r = rows_.size();
  if (r <= kDenseRank) {
    dense_.assign(r * r * r, 0);
    for (std::size_t t = 0; t < r; ++t)
      for (const Entry& e : rows_[t]) dense_[(t * r + e.r) * r + e.s] = e.count;
  }
}

std::uint32_t IntersectionTensor::at(Color r, Color s, Color t) const {
  const std::size_t k = rows_.size();
  if (r >= k || s >= k || t >= k) throw UsageError("color out of range");
  if (!dense_.empty()) return dense_[(static_cast<std::size_t>(t) * k + r) * k + s];
  const auto& row = rows_[t];
  auto it = std::lower_bound(row.begin(), row.end(), std::pair{r, s}, [](const Entry& e, const auto& key) {
    return std::pair{e.r, e.s} < key;
  });
  return (it != row.end() && it->r == r && it->s == s) ? it->count : 0;
}

std::uint32_t IntersectionTensor::max_in_row(Color t) const {
  std::uint32_t m = 0;
  for (const Entry& e : rows_[t]) m = std::max(m, e.count);
  return m;
}

bool IntersectionTensor::operator==(const IntersectionTensor& o) const {
  if (degree_ != o.degree_ || valencies_ != o.valencies_ || rows_.size() != o.rows_.size()) return false;
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    if (rows_[t].size() != o.rows_[t].size()) return false;
    for (std::size_t i = 0; i < rows_[t].size(); ++i) {
      const Entry& a = rows_[t][i];
      const Entry& b = o.rows_[t][i];
      if (a.r != b.r || a.s != b.s || a.count != b.count) return false;
    }
  }
  return true;
}

namespace {

std::string triple_str(Color r, Color s, Color t) {
  return "(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")";
}

// First triple on which the two profiles of a color disagree.
std::tuple<Color, Color, std::uint32_t, std::uint32_t> first_difference(const PairProfile& a,
                                                                         const PairProfile& b) {
  std::map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> diff;
  for (const auto& [k, c] : a.entries) diff[k].first = c;
  for (const auto& [k, c] : b.entries) diff[k].second = c;
  for (const auto& [k, c] : diff)
    if (c.first != c.second) return {key_first(k), key_second(k), c.first, c.second};
  return {0, 0, 0, 0};
}

std::vector<std::vector<std::uint32_t>> cells_by_color(const CoherentConfiguration& cfg) {
  std::vector<std::vector<std::uint32_t>> out(cfg.rank());
  for (Color c = 0; c < cfg.rank(); ++c) out[c].reserve(cfg.size(c));
  const auto& cells = cfg.matrix().cells;
  for (std::size_t i = 0; i < cells.size(); ++i) out[cells[i]].push_back(static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace

IntersectionTensor intersection_tensor(const CoherentConfiguration& cfg, TensorCheck check,
                                       std::uint64_t seed) {
  const std::size_t n = cfg.degree();
  const std::size_t rank = cfg.rank();
  if (check == TensorCheck::automatic) check = n <= 100 ? TensorCheck::full : TensorCheck::sampled;
  const auto buckets = cells_by_color(cfg);
  const std::size_t samples =
      static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(n, 2)))));
  std::mt19937_64 rng(seed);

  std::vector<std::vector<IntersectionTensor::Entry>> rows(rank);
  std::vector<std::size_t> valencies(rank);
  ProfileBuilder builder(cfg);
  for (Color t = 0; t < rank; ++t) {
    valencies[t] = cfg.valency(t);
    const auto [a, b] = cfg.representative(t);
    const PairProfile rep = builder.profile(a, b);
    rows[t].reserve(rep.entries.size());
    for (const auto& [k, c] : rep.entries) rows[t].push_back({key_first(k), key_second(k), c});

    ProfileMatcher matcher(rep);
    auto check_cell = [&](std::uint32_t cell) {
      const Point x = cell / static_cast<std::uint32_t>(n), y = cell % static_cast<std::uint32_t>(n);
      if (matcher.matches(builder, x, y)) return;
      auto [r, s, want, got] = first_difference(rep, builder.profile(x, y));
      throw IntegrityError("coherence violation at triple " + triple_str(r, s, t) + ": " +
                           std::to_string(want) + " at (" + std::to_string(a) + "," + std::to_string(b) +
                           ") vs " + std::to_string(got) + " at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
    };
    const auto& bucket = buckets[t];
    if (check == TensorCheck::full || bucket.size() <= samples + 1) {
      for (std::uint32_t cell : bucket) check_cell(cell);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, bucket.size() - 1);
      for (std::size_t i = 0; i < samples; ++i) check_cell(bucket[pick(rng)]);
    }
  }
  return IntersectionTensor(n, std::move(valencies), std::move(rows));
}

VerificationReport validate(const ColorMatrix& m, ValidationLevel level) {
  VerificationReport report("validate", level == ValidationLevel::full ? "level=full" : "level=axioms");
  const auto bad = rainbow_violations(m);
  for (const auto& b : bad) report.fail(b);
  report.witness("degree", m.n);
  if (!report.pass || level == ValidationLevel::axioms) {
    if (report.pass) report.witness("rank", m.count_classes());
    return report;
  }
  const CoherentConfiguration cfg(m);
  report.witness("rank", cfg.rank());
  const auto buckets = cells_by_color(cfg);
  const std::size_t n = cfg.degree();
  ProfileBuilder builder(cfg);
  std::set<std::tuple<Color, Color, Color>> violated;
  for (Color t = 0; t < cfg.rank(); ++t) {
    const auto [a, b] = cfg.representative(t);
    const PairProfile rep = builder.profile(a, b);
    ProfileMatcher matcher(rep);
    for (std::uint32_t cell : buckets[t]) {
      const Point x = cell / static_cast<std::uint32_t>(n), y = cell % static_cast<std::uint32_t>(n);
      if (matcher.matches(builder, x, y)) continue;
      const PairProfile other = builder.profile(x, y);
      std::map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> diff;
      for (const auto& [k, c] : rep.entries) diff[k].first = c;
      for (const auto& [k, c] : other.entries) diff[k].second = c;
      for (const auto& [k, c] : diff) {
        if (c.first == c.second) continue;
        if (violated.emplace(key_first(k), key_second(k), t).second)
          report.fail("triple " + triple_str(key_first(k), key_second(k), t) + " count " +
                      std::to_string(c.first) + " at (" + std::to_string(a) + "," + std::to_string(b) +
                      ") but " + std::to_string(c.second) + " at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")");
      }
    }
  }
  report.witness("violated_triples", violated.size());
  return report;
}

VerificationReport validate(const CoherentConfiguration& cfg, ValidationLevel level) {
  return validate(cfg.matrix(), level);
}

std::vector<std::string> tensor_identity_violations(const CoherentConfiguration& cfg,
                                                    const IntersectionTensor& tensor) {
  std::vector<std::string> out;
  const std::size_t rank = cfg.rank();
  // row sums: sum_s c_{rs}^t = n_r for r leaving the source fiber of t
  for (Color t = 0; t < rank; ++t) {
    std::unordered_map<Color, std::size_t> sums;
    for (const auto& e : tensor.row(t)) sums[e.r] += e.count;
    for (Color r = 0; r < rank; ++r) {
      if (cfg.source_fiber(r) != cfg.source_fiber(t)) continue;
      const std::size_t got = sums.contains(r) ? sums[r] : 0;
      if (got != cfg.valency(r))
        out.push_back("row sum for t=" + std::to_string(t) + ", r=" + std::to_string(r) + " is " +
                      std::to_string(got) + ", expected " + std::to_string(cfg.valency(r)));
    }
  }
  // sum_t c_{rs}^t n_t = n_r n_s
  std::unordered_map<std::uint64_t, std::size_t> acc;
  for (Color t = 0; t < rank; ++t)
    for (const auto& e : tensor.row(t)) acc[pack_key(e.r, e.s)] += std::size_t{e.count} * cfg.valency(t);
  for (Color r = 0; r < rank; ++r)
    for (Color s = 0; s < rank; ++s) {
      if (cfg.target_fiber(r) != cfg.source_fiber(s)) continue;
      const auto it = acc.find(pack_key(r, s));
      const std::size_t got = it == acc.end() ? 0 : it->second;
      if (got != cfg.valency(r) * cfg.valency(s))
        out.push_back("weighted sum for (r=" + std::to_string(r) + ",s=" + std::to_string(s) + ") is " +
                      std::to_string(got) + ", expected " + std::to_string(cfg.valency(r) * cfg.valency(s)));
    }
  if (cfg.is_homogeneous()) {
    for (Color r = 0; r < rank; ++r)
      for (Color s = 0; s < rank; ++s)
        for (Color t = 0; t < rank; ++t) {
          const std::size_t x = cfg.valency(t) * tensor.at(r, s, cfg.transpose(t));
          const std::size_t y = cfg.valency(r) * tensor.at(s, t, cfg.transpose(r));
          const std::size_t z = cfg.valency(s) * tensor.at(t, r, cfg.transpose(s));
          if (x != y || y != z)
            out.push_back("triangle identity fails at " + triple_str(r, s, t) + ": " + std::to_string(x) +
                          "/" + std::to_string(y) + "/" + std::to_string(z));
        }
  }
  return out;
}

}  // namespace cohcfg
