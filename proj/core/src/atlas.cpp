#include "padic_orbits/atlas.hpp"

#include <set>
#include <stdexcept>

namespace padic_orbits {

Atlas build_atlas(unsigned long p, int depth,
                  const std::vector<PcfParameter>* pcf) {
  if (depth < 1) throw std::invalid_argument("atlas depth must be >= 1");

  Atlas atlas;
  atlas.p = p;
  atlas.depth = depth;

  std::set<std::pair<int, mpz_class>> flagged;
  if (pcf) {
    for (const auto& param : *pcf) {
      for (int j = 1; j <= depth && j <= param.c.precision(); ++j) {
        flagged.emplace(j, param.c.residue() % pow_p(p, j));
      }
    }
  }

  AtlasNode root;
  root.residue = 0;
  root.level = 0;
  root.type = OrbitType{0, 1};
  atlas.nodes.push_back(root);

  // Level order; children of node at residue r mod p^j are r + d p^j.
  std::vector<int> frontier{0};
  for (int j = 1; j <= depth; ++j) {
    mpz_class step = pow_p(p, j - 1);
    std::vector<int> next;
    for (int idx : frontier) {
      for (unsigned long d = 0; d < p; ++d) {
        AtlasNode node;
        node.residue = atlas.nodes[idx].residue + mpz_class(d) * step;
        node.level = j;
        node.type = orbit_mod(PAdicInt(p, j, node.residue), j).type;
        node.pcf = flagged.count({j, node.residue}) > 0;
        int id = static_cast<int>(atlas.nodes.size());
        atlas.nodes.push_back(std::move(node));
        atlas.nodes[idx].children.push_back(id);
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  return atlas;
}

}  // namespace padic_orbits
