#pragma once

#include <string>
#include <vector>

#include "padic_orbits/atlas.hpp"
#include "padic_orbits/linearization.hpp"
#include "padic_orbits/orbit.hpp"
#include "padic_orbits/pcf.hpp"
#include "padic_orbits/tree.hpp"

namespace padic_orbits {

/// Every JSON document carries this top-level "schema" value.
inline constexpr const char* kSchemaVersion = "padic-orbits/1";

/// "0 -> 1 -> 2 -> 2  (2,1)" with the UTF-8 arrow used in the reports.
std::string orbit_arrow_line(const OrbitRecord& record);

std::string to_json(const OrbitRecord& record, int indent = 2);
std::string to_json(const LevelProfile& profile, int indent = 2);
std::string to_json(const Classification& cls, int indent = 2);
std::string to_json(const std::vector<PcfParameter>& params, unsigned long p,
                    int indent = 2);
std::string to_json(const OrbitTree& tree, int indent = 2);
std::string to_json(const Atlas& atlas, int indent = 2);
std::string to_json(const C2Report& report, int indent = 2);

/// Graphviz form of a critical orbit tree: one node per vertex labeled
/// "a mod p^l", directed parent->child edges with a len attribute, nodes
/// ordered by (level, residue).
std::string to_dot(const OrbitTree& tree);

/// Graphviz form of a parameter atlas, each node labeled with its orbit
/// type; certified parameter paths are marked.
std::string to_dot(const Atlas& atlas);

}  // namespace padic_orbits
