#pragma once

// Per-pair triangle profiles: the multiset {(r(a,g), r(g,b)) : g in Omega}.
// Shared by the tensor, validation and indistinguishing-number code.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cohcfg/configuration.hpp"

namespace cohcfg {

inline std::uint64_t pack_key(Color first, Color second) {
  return (static_cast<std::uint64_t>(first) << 32) | second;
}
inline Color key_first(std::uint64_t k) { return static_cast<Color>(k >> 32); }
inline Color key_second(std::uint64_t k) { return static_cast<Color>(k & 0xffffffffu); }

/// Sorted (key, multiplicity) list; key = pack_key(r(a,g), r(g,b)).
struct PairProfile {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
};

class ProfileBuilder {
 public:
  explicit ProfileBuilder(const CoherentConfiguration& cfg) : cfg_(cfg), keys_(cfg.degree()) {}

  template <typename Fn>
  void for_each_key(Point a, Point b, Fn&& fn) const {
    const std::size_t n = cfg_.degree();
    const Color* ra = cfg_.row(a);
    const Color* rb = cfg_.row(b);
    for (std::size_t g = 0; g < n; ++g) fn(pack_key(ra[g], cfg_.transpose(rb[g])));
  }

  PairProfile profile(Point a, Point b) {
    std::size_t i = 0;
    for_each_key(a, b, [&](std::uint64_t k) { keys_[i++] = k; });
    std::sort(keys_.begin(), keys_.end());
    PairProfile p;
    for (std::uint64_t k : keys_) {
      if (!p.entries.empty() && p.entries.back().first == k)
        ++p.entries.back().second;
      else
        p.entries.emplace_back(k, 1);
    }
    return p;
  }

 private:
  const CoherentConfiguration& cfg_;
  std::vector<std::uint64_t> keys_;
};

/// O(n) equality test of a pair's profile against a fixed reference profile.
class ProfileMatcher {
 public:
  explicit ProfileMatcher(const PairProfile& ref) {
    std::size_t cap = 4;
    while (cap < 2 * ref.entries.size()) cap <<= 1;
    mask_ = cap - 1;
    keys_.assign(cap, kEmpty);
    counts_.assign(cap, 0);
    for (const auto& [k, c] : ref.entries) {
      std::size_t h = slot(k);
      while (keys_[h] != kEmpty) h = (h + 1) & mask_;
      keys_[h] = k;
      counts_[h] = static_cast<std::int32_t>(c);
    }
    work_ = counts_;
  }

  bool matches(const ProfileBuilder& builder, Point a, Point b) {
    bool ok = true;
    builder.for_each_key(a, b, [&](std::uint64_t k) {
      if (!ok) return;
      std::size_t h = slot(k);
      while (keys_[h] != k) {
        if (keys_[h] == kEmpty) {
          ok = false;
          return;
        }
        h = (h + 1) & mask_;
      }
      if (--work_[h] < 0) ok = false;
    });
    // equal totals (n) and no negative count means equal multisets
    std::copy(counts_.begin(), counts_.end(), work_.begin());
    return ok;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  std::size_t slot(std::uint64_t k) const {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k) & mask_;
  }

  std::size_t mask_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> counts_, work_;
};

}  // namespace cohcfg
