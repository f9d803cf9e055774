#include "padic_orbits/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace padic_orbits {

bool DiskVertex::contains(const DiskVertex& other) const {
  if (p != other.p || level > other.level) return false;
  mpz_class m = pow_p(p, level);
  return (other.center - center) % m == 0;
}

std::string DiskVertex::str() const {
  std::ostringstream os;
  os << center.get_str() << " mod " << p << "^" << level;
  return os.str();
}

namespace {

int val_capped(const mpz_class& x, unsigned long p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  mpz_class r = x;
  while (v < cap && r % p == 0) {
    r /= p;
    ++v;
  }
  return v;
}

DiskVertex make_vertex(unsigned long p, int level, const mpz_class& center) {
  mpz_class m = pow_p(p, level);
  mpz_class c = center % m;
  if (c < 0) c += m;
  return DiskVertex{c, level, p};
}

}  // namespace

DiskVertex disk_join(const PAdicInt& a, const PAdicInt& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("join of disks over different primes");
  }
  int cap = std::min(a.precision(), b.precision());
  int level = val_capped(a.residue() - b.residue(), a.prime(), cap);
  return make_vertex(a.prime(), level, a.residue());
}

int path_metric(const DiskVertex& a, const DiskVertex& b) {
  if (a.p != b.p) throw std::invalid_argument("metric across primes");
  int join_level =
      std::min({a.level, b.level,
                val_capped(a.center - b.center, a.p, std::max(a.level, b.level))});
  return (a.level - join_level) + (b.level - join_level);
}

std::vector<int> OrbitTree::children(int vertex_index) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i] == vertex_index) out.push_back(static_cast<int>(i));
  }
  return out;
}

int OrbitTree::find_vertex(const DiskVertex& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == v) return static_cast<int>(i);
  }
  return -1;
}

OrbitTree critical_orbit_tree(const PAdicInt& c, int depth) {
  if (depth < 1 || depth > c.precision()) {
    throw std::invalid_argument("tree depth out of range");
  }
  OrbitRecord rec = orbit_mod(c, depth);

  OrbitTree tree;
  tree.p = c.prime();
  tree.depth = depth;
  tree.c = rec.c;
  tree.type = rec.type;

  int count = rec.type.tail + rec.type.cycle;  // distinct orbit points

  // Vertex set: root, endpoints, all pairwise joins.
  std::set<std::pair<int, mpz_class>> keys;
  keys.emplace(0, mpz_class(0));
  for (int i = 0; i < count; ++i) {
    keys.emplace(depth, rec.sequence[i]);
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      int lvl = val_capped(rec.sequence[i] - rec.sequence[j], tree.p, depth);
      mpz_class m = pow_p(tree.p, lvl);
      keys.emplace(lvl, rec.sequence[i] % m);
    }
  }

  for (const auto& [lvl, center] : keys) {
    tree.vertices.push_back(DiskVertex{center, lvl, tree.p});
  }
  std::sort(tree.vertices.begin(), tree.vertices.end(),
            [](const DiskVertex& a, const DiskVertex& b) {
              return std::pair(a.level, a.center) < std::pair(b.level, b.center);
            });

  // Parent: deepest strictly-shallower vertex containing each vertex.
  int n = static_cast<int>(tree.vertices.size());
  tree.parent.assign(n, -1);
  tree.edge_length.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const DiskVertex& v = tree.vertices[i];
    int best = -1;
    for (int j = 0; j < n; ++j) {
      if (tree.vertices[j].level >= v.level) break;  // sorted by level
      if (tree.vertices[j].contains(v) &&
          (best < 0 || tree.vertices[j].level > tree.vertices[best].level)) {
        best = j;
      }
    }
    tree.parent[i] = best;
    tree.edge_length[i] = best < 0 ? 0 : v.level - tree.vertices[best].level;
  }

  tree.endpoint_vertex.resize(count);
  for (int i = 0; i < count; ++i) {
    int idx = tree.find_vertex(make_vertex(tree.p, depth, rec.sequence[i]));
    if (idx < 0) throw internal_inconsistency("endpoint vertex missing");
    tree.endpoint_vertex[i] = idx;
  }
  tree.induced_next.resize(count);
  for (int i = 0; i < count; ++i) {
    tree.induced_next[i] = (i + 1 < count) ? i + 1 : rec.type.tail;
  }
  return tree;
}

TreeShapeReport shape_check(const OrbitTree& tree, const OrbitTree& tree_mod_p,
                            const Classification& classification) {
  if (!classification.finite()) {
    throw std::invalid_argument(
        "shape constraints only apply to finite critical orbits");
  }

  TreeShapeReport report;
  report.gauss_degree = tree.gauss_degree();

  std::set<int> endpoint_set(tree.endpoint_vertex.begin(),
                             tree.endpoint_vertex.end());
  std::map<int, std::vector<int>> splitting;  // level -> vertex indices
  for (std::size_t i = 1; i < tree.vertices.size(); ++i) {
    if (endpoint_set.count(static_cast<int>(i))) continue;
    auto kids = tree.children(static_cast<int>(i));
    if (kids.size() >= 2) {
      splitting[tree.vertices[i].level].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [lvl, verts] : splitting) {
    report.branching_levels.push_back(lvl);
  }
  report.extra_branch_count = static_cast<int>(splitting.size());
  report.matches_mod_p = report.extra_branch_count == 0;

  if (tree.p == 2) return report;  // descriptive only

  const OrbitType& t = classification.type;
  int n1 = tree_mod_p.type.cycle;
  int m = tree_mod_p.type.tail;
  std::ostringstream why;

  if (classification.kind == OrbitClass::PeriodicExact) {
    if (report.gauss_degree != t.cycle) {
      why << "periodic tree must have Gauss degree " << t.cycle << ", got "
          << report.gauss_degree;
    } else if (report.extra_branch_count != 0) {
      why << "periodic tree cannot branch below the Gauss point";
    }
  } else {
    int r = t.cycle / n1;
    if (t.tail != m) {
      why << "tail mismatch: " << t.tail << " vs mod-p tail " << m;
    } else if (report.gauss_degree != m + n1) {
      why << "pre-periodic tree must have Gauss degree " << (m + n1)
          << ", got " << report.gauss_degree;
    } else if (report.extra_branch_count > 1) {
      why << "more than one branching level";
    } else if (report.extra_branch_count == 0 && r != 1) {
      why << "cycle multiplied by " << r << " but the tree never branches";
    } else if (report.extra_branch_count == 1) {
      const auto& [lvl, verts] = *splitting.begin();
      if (static_cast<int>(verts.size()) != n1) {
        why << "expected " << n1 << " splitting cycle vertices, got "
            << verts.size();
      } else {
        for (int vi : verts) {
          if (static_cast<int>(tree.children(vi).size()) != r) {
            why << "cycle vertex " << tree.vertices[vi].str()
                << " splits into " << tree.children(vi).size()
                << " children, expected " << r;
            break;
          }
        }
      }
    }
  }
  if (!why.str().empty()) {
    throw internal_inconsistency("tree shape violation for c = " +
                                 tree.c.get_str() + ": " + why.str());
  }
  return report;
}

}  // namespace padic_orbits
