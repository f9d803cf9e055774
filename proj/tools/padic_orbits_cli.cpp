// Command line front end: orbits, classification, PCF enumeration, trees,
// parameter atlases and verification suites for z^2 + c over Z_p.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padic_orbits/atlas.hpp"
#include "padic_orbits/errors.hpp"
#include "padic_orbits/linearization.hpp"
#include "padic_orbits/orbit.hpp"
#include "padic_orbits/pcf.hpp"
#include "padic_orbits/serialize.hpp"
#include "padic_orbits/tree.hpp"
#include "padic_orbits/verify.hpp"

namespace {

using namespace padic_orbits;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

PAdicInt parse_c(const std::string& spec, unsigned long p, int precision) {
  if (spec.rfind("digits:", 0) == 0) {
    PAdicInt v = PAdicInt::from_digits(spec.substr(7), p);
    if (precision > 0 && precision < v.precision()) {
      return v.truncate(precision);
    }
    if (precision > 0 && precision > v.precision()) {
      throw std::invalid_argument(
          "requested precision exceeds the supplied digits");
    }
    return v;
  }
  return PAdicInt::from_integer(mpz_class(spec), p, precision);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << content;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<unsigned long> parse_primes(const std::string& text) {
  std::vector<unsigned long> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoul(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical orbits of z^2+c over the p-adic integers"};
  app.require_subcommand(1);

  std::string c_spec;
  std::string format = "text";
  std::string out_path;
  unsigned long p = 3;
  int level = 1;
  int precision = 0;
  int depth = 0;
  int k_window = 0;
  std::uint64_t seed = 1;

  auto* orbit_cmd = app.add_subcommand("orbit", "critical orbit mod p^k");
  orbit_cmd->add_option("--p", p, "prime")->required();
  orbit_cmd->add_option("--c", c_spec, "parameter (integer or digits:d0.d1...)")
      ->required();
  orbit_cmd->add_option("--level", level, "level k")->default_val(1);
  orbit_cmd->add_option("--prec", precision, "working precision");
  orbit_cmd->add_option("--format", format, "text|json");
  orbit_cmd->add_option("--out", out_path, "output file");

  auto* profile_cmd =
      app.add_subcommand("profile", "orbit types per level 1..k");
  profile_cmd->add_option("--p", p, "prime")->required();
  profile_cmd->add_option("--c", c_spec, "parameter")->required();
  profile_cmd->add_option("--k", k_window, "levels")->default_val(8);
  profile_cmd->add_option("--prec", precision, "working precision");
  profile_cmd->add_option("--format", format, "text|json");
  profile_cmd->add_option("--out", out_path, "output file");

  auto* classify_cmd =
      app.add_subcommand("classify", "orbit verdict from a level window");
  classify_cmd->add_option("--p", p, "prime")->required();
  classify_cmd->add_option("--c", c_spec, "parameter")->required();
  classify_cmd->add_option("--k", k_window, "window (0 = default)");
  classify_cmd->add_option("--prec", precision, "working precision");
  classify_cmd->add_option("--format", format, "text|json");
  classify_cmd->add_option("--out", out_path, "output file");

  auto* pcf_cmd = app.add_subcommand("pcf", "enumerate PCF parameters");
  pcf_cmd->add_option("--p", p, "odd prime")->required();
  pcf_cmd->add_option("--prec", precision, "certification precision (0 = auto)");
  pcf_cmd->add_option("--format", format, "text|json");
  pcf_cmd->add_option("--out", out_path, "output file");

  auto* tree_cmd = app.add_subcommand("tree", "critical orbit tree");
  tree_cmd->add_option("--p", p, "prime")->required();
  tree_cmd->add_option("--c", c_spec, "parameter")->required();
  tree_cmd->add_option("--depth", depth, "tree depth (0 = auto)");
  tree_cmd->add_option("--prec", precision, "working precision");
  tree_cmd->add_option("--format", format, "dot|json");
  tree_cmd->add_option("--out", out_path, "output file");

  auto* atlas_cmd =
      app.add_subcommand("atlas", "parameter space sweep to a depth");
  atlas_cmd->add_option("--p", p, "prime")->required();
  atlas_cmd->add_option("--depth", depth, "levels")->default_val(3);
  atlas_cmd->add_option("--format", format, "json|dot");
  atlas_cmd->add_option("--out", out_path, "output file");

  std::string fig_dir;
  auto* figures_cmd =
      app.add_subcommand("figures", "DOT trees plus an index table");
  figures_cmd->add_option("--p", p, "odd prime")->required();
  figures_cmd->add_option("--out", fig_dir, "output directory");

  std::string suite;
  std::string k_range = "2..5";
  std::string primes_text = "3,5,7";
  int i_max = 6;
  int samples = 200;
  int k_max_flag = 8;
  bool explore = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "c2|lemma54|pezda|tail|counts")
      ->required();
  verify_cmd->add_option("--p", primes_text, "comma-separated primes");
  verify_cmd->add_option("--k", k_range, "k range for the c2 suite");
  verify_cmd->add_option("--i", i_max, "levels past k for the c2 suite");
  verify_cmd->add_option("--samples", samples, "sample count");
  verify_cmd->add_option("--kmax", k_max_flag, "profile window for samples");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--format", format, "text|json");
  verify_cmd->add_option("--out", out_path, "output file");
  verify_cmd->add_flag("--explore", explore,
                       "c2 only: also sweep the disk D(1,1/9), report only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*orbit_cmd) {
      if (precision == 0) precision = level;
      OrbitRecord rec = orbit_mod(parse_c(c_spec, p, precision), level);
      emit(format == "json" ? to_json(rec) : orbit_arrow_line(rec), out_path);
    } else if (*profile_cmd) {
      if (precision == 0) precision = k_window;
      LevelProfile prof = level_profile(parse_c(c_spec, p, precision), k_window);
      if (format == "json") {
        emit(to_json(prof), out_path);
      } else {
        std::ostringstream os;
        for (const auto& [k, t] : prof.entries) {
          os << "mod " << p << "^" << k << ": " << t.str() << "\n";
        }
        emit(os.str(), out_path);
      }
    } else if (*classify_cmd) {
      if (precision == 0) precision = std::max(16, k_window);
      PAdicInt c = parse_c(c_spec, p, precision);
      Classification cls = k_window > 0 ? classify(c, k_window) : classify(c);
      if (format == "json") {
        emit(to_json(cls), out_path);
      } else {
        std::ostringstream os;
        os << cls.kind_str();
        if (cls.finite()) {
          os << " " << cls.type.str() << " resolved_at=" << cls.resolved_at
             << (cls.certified ? " certified" : " provisional");
        } else if (cls.kind != OrbitClass::Inconclusive) {
          os << " " << cls.type.str() << " at window " << cls.window();
        }
        os << "\n";
        emit(os.str(), out_path);
      }
    } else if (*pcf_cmd) {
      auto params = enumerate_pcf(p, precision);
      if (format == "text") {
        std::ostringstream os;
        for (const auto& param : params) {
          os << param.type.str() << "  c=" << param.c.digits() << "  "
             << (param.kind == PcfKind::HyperbolicCenter ? "center"
                                                         : "pre-periodic")
             << "  resolved at " << param.resolved_at << "\n";
        }
        os << params.size() << " parameters\n";
        emit(os.str(), out_path);
      } else {
        emit(to_json(params, p), out_path);
      }
    } else if (*tree_cmd) {
      int use_depth = depth;
      int use_prec = precision;
      if (use_depth == 0) {
        // resolved level + 2 when the orbit certifies finite
        PAdicInt probe = parse_c(c_spec, p, use_prec == 0 ? 24 : use_prec);
        Classification cls = classify(probe);
        if (!cls.finite()) {
          throw std::invalid_argument(
              "--depth is required for orbits that do not resolve finite");
        }
        use_depth = cls.resolved_at + 2;
      }
      if (use_prec == 0) use_prec = use_depth;
      OrbitTree tree = critical_orbit_tree(parse_c(c_spec, p, use_prec),
                                           use_depth);
      emit(format == "json" ? to_json(tree) : to_dot(tree), out_path);
    } else if (*atlas_cmd) {
      std::vector<PcfParameter> params;
      const std::vector<PcfParameter>* flag_list = nullptr;
      if (p != 2) {
        params = enumerate_pcf(p);
        flag_list = &params;
      }
      Atlas atlas = build_atlas(p, depth, flag_list);
      emit(format == "dot" ? to_dot(atlas) : to_json(atlas), out_path);
    } else if (*figures_cmd) {
      auto params = enumerate_pcf(p);
      bool reference = p == 3 || p == 5 || p == 7;
      std::filesystem::path dir =
          fig_dir.empty() ? "figures-p" + std::to_string(p) : fig_dir;
      std::filesystem::create_directories(dir);
      std::ostringstream index;
      index << "{\n  \"schema\": \"" << kSchemaVersion << "\",\n  \"p\": " << p
            << ",\n  \"provisional\": " << (reference ? "false" : "true")
            << ",\n  \"trees\": [\n";
      for (std::size_t i = 0; i < params.size(); ++i) {
        const auto& param = params[i];
        int tree_depth = param.resolved_at + 2;
        OrbitTree tree =
            critical_orbit_tree(param.c.truncate(tree_depth), tree_depth);
        std::string name = "tree_p" + std::to_string(p) + "_" +
                           std::to_string(i) + "_m" +
                           std::to_string(param.type.tail) + "n" +
                           std::to_string(param.type.cycle) + ".dot";
        std::ofstream f(dir / name);
        f << to_dot(tree);
        index << "    {\"file\": \"" << name << "\", \"c\": \""
              << param.c.digits() << "\", \"orbit_type\": ["
              << param.type.tail << ", " << param.type.cycle
              << "], \"resolved_at\": " << param.resolved_at << "}"
              << (i + 1 < params.size() ? "," : "") << "\n";
      }
      index << "  ]\n}\n";
      std::ofstream f(dir / "index.json");
      f << index.str();
      if (!reference) {
        std::cerr << "note: p=" << p
                  << " enumeration is provisional (no reference count)\n";
      }
      std::cout << params.size() << " trees written to " << dir.string()
                << "\n";
    } else if (*verify_cmd) {
      auto primes = parse_primes(primes_text);
      auto [k_lo, k_hi] = parse_range(k_range);
      SuiteResult result;
      if (suite == "c2") {
        result = run_c2_suite(k_lo, k_hi, i_max, std::max(0, samples / 20),
                              seed);
        if (explore) {
          std::cerr << explore_disk_one(k_lo, k_hi, i_max, k_hi + i_max + 4);
        }
      } else if (suite == "lemma54") {
        result = run_lemma54_suite(samples, 10, seed);
      } else if (suite == "pezda") {
        result = run_pezda_suite(primes, samples, k_max_flag, seed);
      } else if (suite == "tail") {
        result = run_tail_suite(primes, samples, k_max_flag, seed);
      } else if (suite == "counts") {
        result = run_counts_suite(primes);
      } else {
        throw std::invalid_argument("unknown suite: " + suite);
      }
      emit(format == "json" ? result.to_json() : result.text(), out_path);
      if (!result.pass()) return kExitVerificationFailure;
    }
  } catch (const internal_inconsistency& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const frontier_overflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
