#pragma once

#include "cohcfg/configuration.hpp"
#include "cohcfg/permgroup.hpp"

namespace cohcfg {

/// inv(G): the orbits of G on Omega x Omega, found by BFS over the
/// generators without enumerating the group.
CoherentConfiguration orbitals(const GeneratedGroup& group);
CoherentConfiguration orbitals(std::size_t degree, std::span<const Permutation> generators);

}  // namespace cohcfg
