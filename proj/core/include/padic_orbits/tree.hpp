#pragma once

#include <vector>

#include "padic_orbits/orbit.hpp"
#include "padic_orbits/padic_int.hpp"

namespace padic_orbits {

/// A closed disk D(center, p^-level) seen as a vertex of the Z_p tree.
/// Level 0 with center 0 is the Gauss point, the root.
struct DiskVertex {
  mpz_class center;  // canonical residue mod p^level
  int level = 0;
  unsigned long p = 0;

  friend bool operator==(const DiskVertex&, const DiskVertex&) = default;
  bool contains(const DiskVertex& other) const;
  std::string str() const;
};

/// The convex hull of the critical orbit in the Z_p tree, compressed:
/// vertices are the root, the orbit endpoints, and the branch points;
/// unary chains collapse into weighted edges.
struct OrbitTree {
  unsigned long p = 0;
  int depth = 0;
  mpz_class c;  // residue mod p^depth
  OrbitType type;

  std::vector<DiskVertex> vertices;  // sorted by (level, center); [0] = root
  std::vector<int> parent;           // index into vertices, -1 for the root
  std::vector<int> edge_length;      // to parent; 0 for the root

  /// Orbit index j -> vertex index, for j = 0 .. m+n-1 (the distinct
  /// orbit points).
  std::vector<int> endpoint_vertex;

  /// Induced action on endpoints: orbit index j -> orbit index of f(z_j).
  /// Tail indices advance, cycle indices permute cyclically.
  std::vector<int> induced_next;

  std::vector<int> children(int vertex_index) const;
  int gauss_degree() const { return static_cast<int>(children(0).size()); }
  int find_vertex(const DiskVertex& v) const;  // -1 if absent
};

/// Shape summary checked against the structure theorems for finite
/// orbits: at most one extra branching level relative to the mod-p tree,
/// with all cycle vertices splitting into equally many children there.
struct TreeShapeReport {
  int gauss_degree = 0;
  std::vector<int> branching_levels;  // levels of splitting vertices
  bool matches_mod_p = true;
  int extra_branch_count = 0;
};

/// Smallest disk containing both points.
DiskVertex disk_join(const PAdicInt& a, const PAdicInt& b);

/// Combinatorial path metric through the join.
int path_metric(const DiskVertex& a, const DiskVertex& b);

/// Builds the compressed hull of the critical orbit mod p^depth.
OrbitTree critical_orbit_tree(const PAdicInt& c, int depth);

/// Validates tree against tree_mod_p under a finite classification.
/// For p = 2 the checks are descriptive only; for odd p a violated
/// constraint raises internal_inconsistency.
TreeShapeReport shape_check(const OrbitTree& tree, const OrbitTree& tree_mod_p,
                            const Classification& classification);

}  // namespace padic_orbits
