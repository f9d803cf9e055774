#pragma once

#include <vector>

#include "padic_orbits/orbit.hpp"
#include "padic_orbits/pcf.hpp"

namespace padic_orbits {

/// One parameter disk D(residue, p^-level) in the parameter-space sweep,
/// labeled with the critical orbit type computed at its own level.
struct AtlasNode {
  mpz_class residue;
  int level = 0;
  OrbitType type;
  bool pcf = false;  // matches the truncation of a certified parameter
  std::vector<int> children;
};

/// Breadth-first sweep over all residues mod p^j for j <= depth.  Node 0
/// is the level-0 root (all of Z_p).
struct Atlas {
  unsigned long p = 0;
  int depth = 0;
  std::vector<AtlasNode> nodes;
};

/// pcf may be null (no flagging), e.g. for p = 2 where no certified list
/// exists.
Atlas build_atlas(unsigned long p, int depth,
                  const std::vector<PcfParameter>* pcf = nullptr);

}  // namespace padic_orbits
