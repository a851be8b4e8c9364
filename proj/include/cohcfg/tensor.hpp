#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cohcfg/configuration.hpp"
#include "cohcfg/report.hpp"

namespace cohcfg {

/// Intersection numbers c_{rs}^t = |alpha r ∩ beta s*| for (alpha, beta) in t.
///
/// Stored sparsely: for each t the nonzero (r, s, count) entries sorted by
/// (r, s). At most n entries per t. A dense cube is kept as well for small
/// ranks.
class IntersectionTensor {
 public:
  struct Entry {
    Color r;
    Color s;
    std::uint32_t count;
  };

  IntersectionTensor() = default;
  IntersectionTensor(std::size_t degree, std::vector<std::size_t> valencies,
                     std::vector<std::vector<Entry>> rows);

  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t valency(Color s) const { return valencies_[s]; }
  const std::vector<std::size_t>& valencies() const { return valencies_; }

  /// c_{rs}^t
  std::uint32_t at(Color r, Color s, Color t) const;
  std::span<const Entry> row(Color t) const { return rows_[t]; }
  /// max_{r,s} c_{rs}^t
  std::uint32_t max_in_row(Color t) const;

  bool operator==(const IntersectionTensor& o) const;

 private:
  std::size_t degree_ = 0;
  std::vector<std::size_t> valencies_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::uint32_t> dense_;  // [t][r][s] when rank <= kDenseRank
  static constexpr std::size_t kDenseRank = 96;
};

enum class TensorCheck {
  automatic,  ///< full below degree 100, sampled above
  sampled,    ///< ceil(log2 n) extra random pairs per color
  full,       ///< every pair of every color
};

/// Computes the tensor from one representative pair per color and checks
/// it against further pairs. Throws IntegrityError naming a triple on the
/// first inconsistency.
IntersectionTensor intersection_tensor(const CoherentConfiguration& cfg,
                                       TensorCheck check = TensorCheck::automatic,
                                       std::uint64_t seed = 0);

enum class ValidationLevel { axioms, full };

/// Rainbow axioms in O(n^2); at full level also exact coherence in O(n^3),
/// listing every violated triple (as canonical color ids).
VerificationReport validate(const ColorMatrix& m, ValidationLevel level);
VerificationReport validate(const CoherentConfiguration& cfg, ValidationLevel level);

/// Row sums, sum_t c_{rs}^t n_t = n_r n_s and, for schemes, the triangle
/// identity n_t c_{rs}^{t*} = n_r c_{st}^{r*} = n_s c_{tr}^{s*}.
std::vector<std::string> tensor_identity_violations(const CoherentConfiguration& cfg,
                                                    const IntersectionTensor& tensor);

}  // namespace cohcfg
