#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohcfg/configuration.hpp"
#include "cohcfg/finitefield.hpp"
#include "cohcfg/isomorphism.hpp"
#include "cohcfg/permgroup.hpp"
#include "cohcfg/report.hpp"

namespace cohcfg {

/// Nonzero trace-zero elements of GF(2^d); distinct x, y adjacent iff
/// Tr(xy) = 0.
struct MatchingGraph {
  std::uint32_t d = 0;
  std::vector<Field::Code> vertices;
  std::vector<std::vector<std::uint32_t>> adjacency;  // by vertex index
  std::size_t edges = 0;
  bool connected = false;
  std::vector<std::vector<Field::Code>> components;
};

/// 3 <= d <= 13, otherwise UsageError.
MatchingGraph matching_graph(std::uint32_t d);

/// Every ordered pair of non-singleton fibers of X_alpha (large Hollmann
/// scheme, q in {8, 16, 32}) has a matching color; also checks that for
/// Tr(xy) = 0 a matching lies inside s_{x+y}.
VerificationReport verify_matchings(std::uint32_t q);

/// Partly regular or (2k - 1) c >= n.
VerificationReport check_bound_201444a(const CoherentConfiguration& cfg);

/// One pair per orbit of `group` on the cells of color t (row-major least
/// cell of each orbit).
std::vector<std::pair<Point, Point>> pair_orbit_representatives(const CoherentConfiguration& cfg, Color t,
                                                                const GeneratedGroup& group);

/// If (2 m_t - 1) c < n, extends at one pair per orbit of aut (or of
/// `group`, which must consist of automorphisms) on t and requires each
/// extension to be partly regular. Otherwise passes with
/// hypothesis=not-met.
VerificationReport check_cor_423939b(const CoherentConfiguration& cfg, Color t,
                                     const GeneratedGroup* group = nullptr);

/// Every extension at a pair of distinct points is partly regular; pairs
/// are taken one per orbit of `group` on each irreflexive color.
VerificationReport two_point_extensions_partly_regular(const CoherentConfiguration& cfg,
                                                       const GeneratedGroup& group);

/// X == inv(aut(X)).
VerificationReport is_schurian(const CoherentConfiguration& cfg, const std::vector<Permutation>& known = {});

inline constexpr std::size_t kSeparableSearchMaxDegree = 40;

/// Partly regular inputs pass without search. Otherwise every algebraic
/// automorphism must be induced by a point bijection; ResourceError above
/// rank kAlgebraicSearchMaxRank or degree kSeparableSearchMaxDegree.
VerificationReport is_separable_small(const CoherentConfiguration& cfg);

enum class BaseMode { greedy, exact };

struct BaseNumber {
  std::size_t value = 0;
  /// points whose extension is discrete
  std::vector<Point> points;
  BaseMode mode = BaseMode::greedy;
};

inline constexpr std::size_t kExactBaseMaxDegree = 200;
inline constexpr std::size_t kExactBaseMaxValue = 4;

/// Greedy: individualize the least point of a largest non-singleton fiber
/// until discrete. Exact: minimum over point tuples up to
/// automorphism-orbit pruning; ResourceError (quoting the greedy value)
/// beyond the guards.
BaseNumber base_number(const CoherentConfiguration& cfg, BaseMode mode);

/// "q=8,family=passman" or "q=8 family=passman" -> key/value map.
std::map<std::string, std::string> parse_params(const std::string& text);

/// Claim ids understood by verify_theorem.
const std::vector<std::string>& known_claims();

/// Runs one named check; failures are report entries, never exceptions.
VerificationReport verify_theorem(const std::string& id, const std::string& params);

}  // namespace cohcfg
