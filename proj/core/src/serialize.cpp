#include "padic_orbits/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace padic_orbits {

using nlohmann::json;

namespace {

json type_json(const OrbitType& t) { return json::array({t.tail, t.cycle}); }

json sequence_json(const std::vector<mpz_class>& seq) {
  json out = json::array();
  for (const auto& z : seq) out.push_back(z.get_str());
  return out;
}

std::string digits_of(unsigned long p, int precision, const mpz_class& residue) {
  return PAdicInt(p, precision, residue).digits();
}

}  // namespace

std::string orbit_arrow_line(const OrbitRecord& record) {
  std::ostringstream os;
  for (std::size_t i = 0; i < record.sequence.size(); ++i) {
    if (i) os << " → ";
    os << record.sequence[i].get_str();
  }
  os << "  " << record.type.str();
  return os.str();
}

std::string to_json(const OrbitRecord& record, int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = record.p;
  j["k"] = record.level;
  j["c"] = digits_of(record.p, record.level, record.c);
  j["sequence"] = sequence_json(record.sequence);
  j["m"] = record.type.tail;
  j["n"] = record.type.cycle;
  return j.dump(indent);
}

std::string to_json(const LevelProfile& profile, int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = profile.p;
  j["c"] = digits_of(profile.p, profile.c_precision, profile.c);
  j["k_max"] = profile.k_max();
  json levels = json::array();
  for (const auto& [k, t] : profile.entries) {
    levels.push_back({{"k", k}, {"m", t.tail}, {"n", t.cycle}});
  }
  j["profile"] = levels;
  return j.dump(indent);
}

std::string to_json(const Classification& cls, int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = cls.profile.p;
  j["c"] = digits_of(cls.profile.p, cls.profile.c_precision, cls.profile.c);
  j["kind"] = cls.kind_str();
  j["m"] = cls.type.tail;
  j["n"] = cls.type.cycle;
  j["certified"] = cls.certified;
  j["window"] = cls.window();
  if (cls.finite()) j["resolved_at"] = cls.resolved_at;
  json levels = json::array();
  for (const auto& [k, t] : cls.profile.entries) {
    levels.push_back({{"k", k}, {"m", t.tail}, {"n", t.cycle}});
  }
  j["profile"] = levels;
  return j.dump(indent);
}

std::string to_json(const std::vector<PcfParameter>& params, unsigned long p,
                    int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = p;
  json list = json::array();
  for (const auto& param : params) {
    json e;
    e["c"] = param.c.digits();
    e["p"] = p;
    e["orbit_type"] = type_json(param.type);
    e["kind"] = param.kind == PcfKind::HyperbolicCenter
                    ? "hyperbolic_center"
                    : "strictly_preperiodic";
    e["resolved_at"] = param.resolved_at;
    e["certified"] = true;
    e["certificate"] = {{"level", param.certificate.level},
                        {"val_g", param.certificate.val_g},
                        {"val_g_prime", param.certificate.val_g_prime}};
    list.push_back(e);
  }
  j["parameters"] = list;
  return j.dump(indent);
}

std::string to_json(const OrbitTree& tree, int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = tree.p;
  j["depth"] = tree.depth;
  j["c"] = digits_of(tree.p, tree.depth, tree.c);
  j["m"] = tree.type.tail;
  j["n"] = tree.type.cycle;
  json verts = json::array();
  for (const auto& v : tree.vertices) {
    verts.push_back({{"center", v.center.get_str()}, {"level", v.level}});
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (std::size_t i = 0; i < tree.parent.size(); ++i) {
    if (tree.parent[i] < 0) continue;
    edges.push_back({{"parent", tree.parent[i]},
                     {"child", static_cast<int>(i)},
                     {"length", tree.edge_length[i]}});
  }
  j["edges"] = edges;
  json endpoints = json::array();
  for (std::size_t i = 0; i < tree.endpoint_vertex.size(); ++i) {
    endpoints.push_back({{"orbit_index", static_cast<int>(i)},
                         {"vertex", tree.endpoint_vertex[i]}});
  }
  j["endpoints"] = endpoints;
  json induced = json::array();
  for (std::size_t i = 0; i < tree.induced_next.size(); ++i) {
    induced.push_back({{"from", static_cast<int>(i)},
                       {"to", tree.induced_next[i]}});
  }
  j["induced_map"] = induced;
  return j.dump(indent);
}

std::string to_json(const Atlas& atlas, int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = atlas.p;
  j["depth"] = atlas.depth;
  json nodes = json::array();
  for (const auto& node : atlas.nodes) {
    json e;
    e["residue"] = node.residue.get_str();
    e["level"] = node.level;
    e["orbit_type"] = type_json(node.type);
    e["pcf"] = node.pcf;
    e["children"] = node.children;
    nodes.push_back(e);
  }
  j["nodes"] = nodes;
  return j.dump(indent);
}

std::string to_json(const C2Report& report, int indent) {
  json j;
  j["schema"] = kSchemaVersion;
  j["p"] = 3;
  j["k"] = report.k;
  j["l"] = report.l;
  j["tail_seed"] = report.tail_seed;
  j["c"] = report.c.digits();
  j["fixed_point_in_zp"] = report.fixed_point_in_zp;
  if (report.fixed_point) j["fixed_point"] = report.fixed_point->digits();
  if (report.distance_val) j["distance_val"] = *report.distance_val;
  j["radius_exponent"] = report.radius.exponent().get_str();
  j["in_disk_pass"] = report.in_disk_pass;
  j["profile_pass"] = report.profile_pass;
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"level", v.level},
                        {"expected", type_json(v.expected)},
                        {"got", type_json(v.got)},
                        {"pass", v.pass}});
  }
  j["verdicts"] = verdicts;
  return j.dump(indent);
}

std::string to_dot(const OrbitTree& tree) {
  std::ostringstream os;
  os << "digraph critical_orbit_tree {\n";
  os << "  // c = " << digits_of(tree.p, tree.depth, tree.c) << " (base "
     << tree.p << "), orbit type " << tree.type.str() << "\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << tree.vertices[i].center.get_str()
       << " mod " << tree.p << "^" << tree.vertices[i].level << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.parent.size(); ++i) {
    if (tree.parent[i] < 0) continue;
    os << "  v" << tree.parent[i] << " -> v" << i << " [len="
       << tree.edge_length[i] << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Atlas& atlas) {
  std::ostringstream os;
  os << "digraph parameter_atlas {\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < atlas.nodes.size(); ++i) {
    const auto& node = atlas.nodes[i];
    os << "  a" << i << " [label=\"";
    if (node.level == 0) {
      os << "Z_" << atlas.p;
    } else {
      os << node.residue.get_str() << " mod " << atlas.p << "^" << node.level
         << "\\n" << node.type.str();
    }
    os << "\"";
    if (node.pcf) os << " style=filled fillcolor=gray";
    os << "];\n";
  }
  for (std::size_t i = 0; i < atlas.nodes.size(); ++i) {
    for (int child : atlas.nodes[i].children) {
      os << "  a" << i << " -> a" << child << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace padic_orbits
