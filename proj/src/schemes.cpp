#include "cohcfg/schemes.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cohcfg/errors.hpp"
#include "cohcfg/orbitals.hpp"
#include "cohcfg/structure.hpp"
#include "cohcfg/tensor.hpp"

namespace cohcfg {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw IntegrityError(what);
}

std::uint32_t admissible_power_of_two(std::uint32_t q, std::uint32_t min_d, std::uint32_t max_d) {
  std::uint32_t p = 0, d = 0;
  if (!prime_power(q, p, d) || p != 2 || d < min_d || d > max_d)
    throw UsageError("q = " + std::to_string(q) + " is not 2^d with " + std::to_string(min_d) + " <= d <= " +
                     std::to_string(max_d));
  return d;
}

}  // namespace

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& d) {
  if (q < 2) return false;
  p = 0;
  for (std::uint32_t f = 2; f * f <= q; ++f)
    if (q % f == 0) {
      p = f;
      break;
    }
  if (p == 0) p = q;
  d = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++d;
  }
  return r == 1;
}

// ---------------------------------------------------------------- Hollmann

HollmannModel::HollmannModel(std::uint32_t q)
    : field(Field::make(2, admissible_power_of_two(q, 2, 10))), ext(field) {
  for (Field::Code b = 1; b < q; ++b)
    for (Field::Code a = 0; a < q; ++a)
      if (a < (a ^ b)) points.push_back({a, b});
  index_.assign(static_cast<std::size_t>(q) * q, 0);
  for (Point i = 0; i < points.size(); ++i) {
    const auto w = points[i];
    index_[w.b * q + w.a] = i;
    index_[w.b * q + (w.a ^ w.b)] = i;
  }
  const auto act = [&](auto&& f) {
    std::vector<Point> images(points.size());
    for (Point i = 0; i < points.size(); ++i) images[i] = index_of(f(points[i]));
    return Permutation(std::move(images));
  };
  const Field::Code zeta = field->primitive_element();
  psl_generators.push_back(act([&](QuadExtension::Elem w) { return ext.add(w, QuadExtension::embed(1)); }));
  psl_generators.push_back(act([&](QuadExtension::Elem w) { return ext.mul(w, QuadExtension::embed(zeta)); }));
  psl_generators.push_back(act([&](QuadExtension::Elem w) { return ext.inv(w); }));
  frobenius = act([&](QuadExtension::Elem w) { return ext.square(w); });
}

Point HollmannModel::index_of(QuadExtension::Elem w) const {
  if (w.b == 0) throw IntegrityError("projective map sent an exterior point into the base field");
  return index_[w.b * field->order() + w.a];
}

GroupScheme hollmann_large(std::uint32_t q) {
  admissible_power_of_two(q, 3, 7);
  const HollmannModel model(q);
  GeneratedGroup group(model.points.size(), model.psl_generators);
  CoherentConfiguration x = orbitals(group);
  const std::size_t n = static_cast<std::size_t>(q) * (q - 1) / 2;
  ensure(x.degree() == n, "large Hollmann: wrong degree");
  ensure(x.rank() == q / 2, "large Hollmann: rank " + std::to_string(x.rank()) + ", expected " + std::to_string(q / 2));
  ensure(x.is_symmetric(), "large Hollmann: not symmetric");
  const auto pc = is_pseudocyclic(x);
  ensure(pc.pseudocyclic && pc.valency == q + 1, "large Hollmann: not pseudocyclic of valency q+1");
  return {std::move(x), std::move(group)};
}

SmallHollmann hollmann_small(std::uint32_t q) {
  const std::uint32_t d = admissible_power_of_two(q, 3, 5);
  if (d != 3 && d != 5) throw UsageError("small Hollmann scheme is built for d in {3, 5}");
  const HollmannModel model(q);
  auto gens = model.psl_generators;
  gens.push_back(model.frobenius);
  GeneratedGroup group(model.points.size(), gens);
  CoherentConfiguration by_orbitals = orbitals(group);

  CoherentConfiguration large = orbitals(model.points.size(), model.psl_generators);
  const ColorAction action = induced_color_action(large, model.frobenius);
  ensure(action.permutation.has_value(), "Frobenius does not act on the colors: " + action.reason);
  ensure(color_permutation_order(*action.permutation) == d, "Frobenius color action has order != d");
  const std::vector<ColorPermutation> phi{*action.permutation};
  Fusion fused = algebraic_fusion(large, phi);
  ensure(fused.fused == by_orbitals, "small Hollmann: fusion and orbital routes differ");
  ensure(is_pseudocyclic(by_orbitals).valency == d * (q + 1), "small Hollmann: valency is not d(q+1)");
  return {std::move(by_orbitals), std::move(group), std::move(large), std::move(fused.map)};
}

// ---------------------------------------------------------------- Passman

PassmanModel::PassmanModel(std::uint32_t q) {
  std::uint32_t p = 0, d = 0;
  if (!prime_power(q, p, d) || p == 2 || q > 31)
    throw UsageError("Passman scheme needs an odd prime power 3 <= q <= 31, got " + std::to_string(q));
  field = Field::make(p, d);
  const Field::Code zeta = field->primitive_element();
  h_generators = {h_element(zeta, 0, 0), h_element(1, 1, 0), h_element(1, 0, 1)};
  d_generators = {linear(-1, 0, 0, 1), linear(0, 1, 1, 0)};
  rotation = linear(0, 1, -1, 0);
}

Permutation PassmanModel::h_element(Field::Code a, Field::Code b, Field::Code c) const {
  const Field& f = *field;
  const Field::Code q = f.order();
  const Field::Code ainv = f.inv(a);
  std::vector<Point> images(static_cast<std::size_t>(q) * q);
  for (Field::Code x = 0; x < q; ++x)
    for (Field::Code y = 0; y < q; ++y)
      images[point(x, y)] = point(f.add(f.mul(a, x), b), f.add(f.mul(y, ainv), c));
  return Permutation(std::move(images));
}

Permutation PassmanModel::linear(int m00, int m01, int m10, int m11) const {
  const Field& f = *field;
  const Field::Code q = f.order();
  const auto scale = [&](int m, Field::Code v) -> Field::Code { return m == 0 ? 0 : (m > 0 ? v : f.neg(v)); };
  std::vector<Point> images(static_cast<std::size_t>(q) * q);
  for (Field::Code x = 0; x < q; ++x)
    for (Field::Code y = 0; y < q; ++y)
      images[point(x, y)] = point(f.add(scale(m00, x), scale(m01, y)), f.add(scale(m10, x), scale(m11, y)));
  return Permutation(std::move(images));
}

PassmanScheme passman_scheme(std::uint32_t q) {
  const PassmanModel model(q);
  const std::size_t n = static_cast<std::size_t>(q) * q;
  auto gens = model.h_generators;
  gens.insert(gens.end(), model.d_generators.begin(), model.d_generators.end());
  GeneratedGroup g(n, gens);
  GeneratedGroup h(n, model.h_generators);
  ensure(g.order() == 4ull * q * q * (q - 1), "Passman: |G| != 4q^2(q-1)");
  ensure(g.point_stabilizer(0).order() == 4ull * (q - 1), "Passman: |G_0| != 4(q-1)");
  CoherentConfiguration x = orbitals(g);
  CoherentConfiguration y = orbitals(h);

  const ColorAction action = induced_color_action(y, model.rotation);
  ensure(action.permutation.has_value(), "rotation does not act on inv(H): " + action.reason);
  const std::vector<ColorPermutation> phi{*action.permutation};
  Fusion fused = algebraic_fusion(y, phi);
  ensure(fused.map.group_order == 2, "Passman: |Phi| != 2");
  ensure(fused.fused == x, "Passman: inv(H)^Phi differs from inv(G)");
  const auto pc = is_pseudocyclic(x);
  ensure(pc.pseudocyclic && pc.valency == 2 * (q - 1), "Passman: not pseudocyclic of valency 2(q-1)");

  PassmanScheme out{std::move(x), std::move(g), std::move(y), std::move(h), std::move(fused.map), 0, 0};
  const Point origin = model.point(0, 0), one = model.point(1, 1);
  out.u = out.frobenius_part.color(origin, one);
  out.t = out.scheme.color(origin, one);
  return out;
}

const std::vector<std::string>& scheme_families() {
  static const std::vector<std::string> names{"hollmann-large", "hollmann-small", "passman", "passman-frobenius"};
  return names;
}

GroupScheme build_family(const std::string& family, std::uint32_t q) {
  if (family == "hollmann-large") return hollmann_large(q);
  if (family == "hollmann-small") {
    SmallHollmann s = hollmann_small(q);
    return {std::move(s.scheme), std::move(s.group)};
  }
  if (family == "passman" || family == "passman-frobenius") {
    PassmanScheme s = passman_scheme(q);
    if (family == "passman") return {std::move(s.scheme), std::move(s.group)};
    return {std::move(s.frobenius_part), std::move(s.frobenius_group)};
  }
  throw UsageError("unknown family '" + family + "'");
}

// ---------------------------------------------------------------- T0 labels

TraceLabeling t0_cross_check(std::uint32_t q) {
  admissible_power_of_two(q, 3, 5);
  const GroupScheme hl = hollmann_large(q);
  const CoherentConfiguration& x = hl.scheme;
  const IntersectionTensor tensor = intersection_tensor(x, TensorCheck::full);
  const auto field = Field::make(2, admissible_power_of_two(q, 3, 5));
  const auto t0 = field->trace_zero_set();
  const std::size_t k = t0.size();

  TraceLabeling out;
  out.report = VerificationReport("250720c", "q=" + std::to_string(q));
  out.elements = t0;
  if (k != x.rank()) {
    out.report.fail("|T0| = " + std::to_string(k) + " but rank = " + std::to_string(x.rank()));
    return out;
  }
  // basis of T0 first, then the remaining elements in code order
  std::vector<std::size_t> order;
  std::vector<bool> in_span(q, false), taken(k, false);
  in_span[0] = true;
  for (std::size_t i = 1; i < k; ++i) {
    if (in_span[t0[i]]) continue;
    order.push_back(i);
    taken[i] = true;
    std::vector<Field::Code> span;
    for (Field::Code v = 0; v < q; ++v)
      if (in_span[v]) span.push_back(v ^ t0[i]);
    for (Field::Code v : span) in_span[v] = true;
  }
  for (std::size_t i = 1; i < k; ++i)
    if (!taken[i]) order.push_back(i);

  const Color reflexive = x.fiber_color(0);
  std::vector<Color> label(k, 0);
  std::vector<bool> assigned(k, false), used(x.rank(), false);
  label[0] = reflexive;
  assigned[0] = true;
  used[reflexive] = true;
  std::uint64_t nodes = 0;

  const auto consistent = [&](std::size_t xi, std::size_t yi, std::size_t zi) {
    const Field::Code xv = t0[xi], yv = t0[yi], zv = t0[zi];
    if (zv == 0) return true;
    const bool want = field->trace(field->mul(xv, zv)) == 0 && (xv ^ yv ^ zv) == 0;
    return want == (tensor.at(label[xi], label[yi], label[zi]) == 1);
  };
  const auto check_new = [&](std::size_t e) {
    for (std::size_t u = 0; u < k; ++u) {
      if (!assigned[u]) continue;
      for (std::size_t v = 0; v < k; ++v) {
        if (!assigned[v]) continue;
        if (!consistent(e, u, v) || !consistent(u, e, v) || !consistent(u, v, e)) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t e = order[depth];
    for (Color s = 0; s < x.rank(); ++s) {
      if (used[s]) continue;
      ++nodes;
      label[e] = s;
      assigned[e] = true;
      used[s] = true;
      if (check_new(e) && search(depth + 1)) return true;
      assigned[e] = false;
      used[s] = false;
    }
    return false;
  };
  const bool found = check_new(0) && search(0);
  out.report.witness("rank", x.rank());
  out.report.witness("search_nodes", nodes);
  out.report.witness("checked_targets", std::string("z!=0"));
  if (!found) {
    out.report.fail("no bijection T0 -> S satisfies the trace rule");
    return out;
  }
  out.colors = label;
  std::string map;
  for (std::size_t i = 0; i < k; ++i) {
    if (!map.empty()) map += ',';
    map += std::to_string(t0[i]) + "->" + std::to_string(label[i]);
  }
  out.report.witness("bijection", map);
  return out;
}

}  // namespace cohcfg
