#include "cohcfg/orbitals.hpp"

#include <limits>

#include "cohcfg/errors.hpp"

namespace cohcfg {

CoherentConfiguration orbitals(std::size_t degree, std::span<const Permutation> generators) {
  const std::size_t n = degree;
  for (const auto& g : generators)
    if (g.degree() != n) throw UsageError("generator degree differs from group degree");
  constexpr Color kUnset = std::numeric_limits<Color>::max();
  std::vector<Color> cells(n * n, kUnset);
  std::vector<std::uint32_t> queue;
  Color next = 0;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (cells[start] != kUnset) continue;
    cells[start] = next;
    queue.assign(1, static_cast<std::uint32_t>(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point a = queue[head] / n, b = queue[head] % n;
      for (const auto& g : generators) {
        const std::size_t img = static_cast<std::size_t>(g(a)) * n + g(b);
        if (cells[img] == kUnset) {
          cells[img] = next;
          queue.push_back(static_cast<std::uint32_t>(img));
        }
      }
    }
    ++next;
  }
  return CoherentConfiguration(canonical_relabel(ColorMatrix(n, std::move(cells))));
}

CoherentConfiguration orbitals(const GeneratedGroup& group) {
  return orbitals(group.degree(), group.generators());
}

}  // namespace cohcfg
