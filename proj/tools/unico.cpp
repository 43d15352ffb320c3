#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unico/catalog.hpp"
#include "unico/connectivity.hpp"
#include "unico/errors.hpp"
#include "unico/instance.hpp"
#include "unico/report.hpp"
#include "unico/suite.hpp"
#include "unico/topology_gen.hpp"

namespace fs = std::filesystem;
using namespace unico;

namespace {

// exit codes: 0 consistent, 1 theorem inconsistency, 2 input error,
// 3 enumeration cap reached on a requested property
constexpr int kExitInconsistent = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

Instance resolve_instance(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) {
    std::string name = ref.substr(8);
    if (const Instance* inst = catalog_find(name)) return *inst;
    throw ParseError(ref, "no catalog instance named \"" + name + "\"");
  }
  return load_instance(ref);
}

std::vector<PropertyId> parse_properties(const std::string& csv) {
  std::vector<PropertyId> out;
  std::string token;
  std::stringstream ss(csv);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    auto id = property_from_name(token);
    if (!id) throw ParseError("--properties", "unknown property \"" + token + "\"");
    out.push_back(*id);
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_analyze(const std::string& ref, const std::string& props, int max_enum, bool json_out,
                bool timings) {
  auto start = std::chrono::steady_clock::now();
  Instance inst = resolve_instance(ref);
  AnalysisOptions opts;
  opts.properties = props.empty() ? std::vector<PropertyId>{} : parse_properties(props);
  opts.max_enum = max_enum;
  AnalysisOutcome out = run_analysis(inst, opts);
  if (json_out) {
    std::cout << analysis_to_json(out).dump(2) << "\n";
  } else {
    std::cout << analysis_to_text(out);
    if (timings)
      std::cout << "elapsed: " << seconds_since(start) << " s\n";
  }
  return out.exit_code();
}

int cmd_theorems(bool use_catalog, const std::string& dir, int gen_points, int max_enum,
                 bool json_out, bool timings) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Instance> instances;
  std::string source;
  if (use_catalog) {
    instances = catalog();
    source = "catalog";
  } else if (!dir.empty()) {
    if (!fs::is_directory(dir)) throw ParseError(dir, "not a directory");
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".json") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) instances.push_back(load_instance(p));
    source = "dir:" + dir;
  } else {
    for (auto& s : all_topologies(gen_points)) {
      Instance inst;
      inst.name = "T" + std::to_string(gen_points) + "_" + std::to_string(instances.size());
      inst.space = std::move(s);
      instances.push_back(std::move(inst));
    }
    source = "generate:" + std::to_string(gen_points);
  }

  TheoremOptions opts;
  opts.max_enum = max_enum;
  opts.exhaustive_lemmas = use_catalog;  // fixtures get the full family sweep
  TheoremReport rep = run_theorem_suite(instances, source, opts);
  if (json_out) {
    std::cout << theorem_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << theorem_report_text(rep);
    if (timings) std::cout << "elapsed: " << seconds_since(start) << " s\n";
  }
  return rep.exit_code();
}

int cmd_compare(const std::string& ref, int max_enum, bool json_out) {
  Instance inst = resolve_instance(ref);
  if (!inst.is_space()) throw ParseError(ref, "compare needs a space instance");
  CrossCheck cc = cross_check(*inst.space, max_enum);
  bool conn = classical_connected(*inst.space, inst.space->full());
  if (json_out) {
    ordered_json j;
    j["instance"] = inst.name;
    j["classical"] =
        ordered_json{{"connected", conn}, {"unicoherent", cc.classical_unicoherent}};
    j["localic"] = ordered_json{{"unicoherent", cc.localic_unicoherent}};
    j["unicoherence_agrees"] = cc.unicoherence_agrees;
    j["continua_agree"] = cc.continua_agree;
    j["continua_checked"] = cc.continua_checked;
    if (!cc.first_disagreement.is_null()) j["disagreement"] = cc.first_disagreement;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "instance: " << inst.name << "\n"
              << "classical: connected=" << (conn ? "yes" : "no")
              << " unicoherent=" << (cc.classical_unicoherent ? "yes" : "no") << "\n"
              << "localic:   unicoherent=" << (cc.localic_unicoherent ? "yes" : "no") << "\n"
              << "agreement: unicoherence " << (cc.unicoherence_agrees ? "yes" : "NO")
              << ", continua " << (cc.continua_agree ? "yes" : "NO") << " ("
              << cc.continua_checked << " closed sets)\n";
    if (!cc.first_disagreement.is_null())
      std::cout << "disagreement: " << cc.first_disagreement.dump() << "\n";
  }
  return cc.agrees() ? 0 : kExitInconsistent;
}

int cmd_components(const std::string& ref, int element, int max_enum, bool json_out) {
  Instance inst = resolve_instance(ref);
  Frame f = inst.realize_frame();
  if (element < 0 || element >= f.size())
    throw ParseError("--element", "element index out of range");
  PropertyEngine engine(f, max_enum);
  LatticeConnectivity* cert = nullptr;
  if (engine.lattice_if_enumerable()) cert = &engine.lattice_connectivity();
  ComponentSet cs = components_of_open(f, element, cert);
  if (json_out) {
    ordered_json j;
    j["instance"] = inst.name;
    j["element"] = element;
    j["label"] = f.label(element);
    j["certified"] = cert != nullptr;
    ordered_json comps = ordered_json::array();
    for (std::size_t k = 0; k < cs.components.size(); ++k) {
      ordered_json one;
      one["support"] = cs.supports[k];
      one["support_label"] = f.label(cs.supports[k]);
      ordered_json members = ordered_json::array();
      cs.components[k].members().for_each([&](int i) { members.push_back(f.label(i)); });
      one["members"] = members;
      comps.push_back(one);
    }
    j["components"] = comps;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "components of o(" << f.label(element) << ") in " << inst.name << ": "
              << cs.components.size() << (cert ? "" : " (maximality not certified)") << "\n";
    for (std::size_t k = 0; k < cs.components.size(); ++k) {
      std::cout << "  o(" << f.label(cs.supports[k]) << ") = {";
      bool first = true;
      cs.components[k].members().for_each([&](int i) {
        if (!first) std::cout << ", ";
        std::cout << f.label(i);
        first = false;
      });
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_catalog(bool list, const std::string& dump_dir) {
  if (!dump_dir.empty()) {
    fs::create_directories(dump_dir);
    for (const auto& inst : catalog()) {
      std::ofstream out(fs::path(dump_dir) / (inst.name + ".json"));
      out << instance_to_json(inst).dump(2) << "\n";
    }
    auto [n, pairs] = m3_order();
    ordered_json m3{{"kind", "frame"}, {"name", "M3"}, {"n", n}};
    ordered_json pj = ordered_json::array();
    for (auto [a, b] : pairs) pj.push_back({a, b});
    m3["leq"] = pj;
    std::ofstream out(fs::path(dump_dir) / "M3.json");
    out << m3.dump(2) << "\n";
    std::cout << "wrote " << catalog().size() + 1 << " files to " << dump_dir << "\n";
  }
  if (list || dump_dir.empty()) {
    for (const auto& inst : catalog())
      std::cout << inst.name << "  ("
                << (inst.is_space() ? "space, " + std::to_string(inst.space->point_count()) +
                                          " points"
                                    : "frame, " + std::to_string(inst.frame->size()) +
                                          " elements")
                << ")\n";
    std::cout << "M3  (frame order, rejected as non-distributive)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-locale connectedness and unicoherence checker"};
  app.require_subcommand(1);

  std::string instance_ref, props, dir, dump_dir;
  int max_enum = SublocaleLattice::kDefaultCap;
  int gen_points = 0, element = 0;
  bool json_out = false, timings = false, use_catalog = false, list = false;

  auto* analyze = app.add_subcommand("analyze", "evaluate all properties on one instance");
  analyze->add_option("file", instance_ref, "instance file (or catalog:NAME)")->required();
  analyze->add_option("--properties", props, "comma-separated subset, e.g. I,III,N+");
  analyze->add_option("--max-enum", max_enum, "frame-size cap for sublocale enumeration");
  analyze->add_flag("--json", json_out, "machine-readable output");
  analyze->add_flag("--timings", timings, "print elapsed time (text output only)");

  auto* theorems = app.add_subcommand("theorems", "equivalence and lemma sweep");
  theorems->add_flag("--catalog", use_catalog, "run the built-in fixtures");
  theorems->add_option("--dir", dir, "run every .json instance in a directory");
  theorems->add_option("--generate-points", gen_points,
                       "run all labelled topologies on exactly K points (K <= 4)")
      ->check(CLI::Range(1, 4));
  theorems->add_option("--max-enum", max_enum, "frame-size cap for sublocale enumeration");
  theorems->add_flag("--json", json_out, "machine-readable output");
  theorems->add_flag("--timings", timings, "print elapsed time (text output only)");

  auto* compare = app.add_subcommand("compare", "classical vs localic cross-check of a space");
  compare->add_option("file", instance_ref, "space instance file (or catalog:NAME)")->required();
  compare->add_option("--max-enum", max_enum, "frame-size cap for sublocale enumeration");
  compare->add_flag("--json", json_out, "machine-readable output");

  auto* components = app.add_subcommand("components", "components of an open sublocale");
  components->add_option("file", instance_ref, "instance file (or catalog:NAME)")->required();
  components->add_option("--element", element, "element u; reports components of o(u)")
      ->required();
  components->add_option("--max-enum", max_enum, "frame-size cap for sublocale enumeration");
  components->add_flag("--json", json_out, "machine-readable output");

  auto* catalog_cmd = app.add_subcommand("catalog", "list or dump the built-in fixtures");
  catalog_cmd->add_flag("--list", list, "list fixture names");
  catalog_cmd->add_option("--dump", dump_dir, "write fixture files into a directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(instance_ref, props, max_enum, json_out, timings);
    if (*theorems) {
      int sources = int(use_catalog) + int(!dir.empty()) + int(gen_points > 0);
      if (sources != 1) {
        std::cerr << "error: choose exactly one of --catalog, --dir, --generate-points\n";
        return kExitInput;
      }
      return cmd_theorems(use_catalog, dir, gen_points, max_enum, json_out, timings);
    }
    if (*compare) return cmd_compare(instance_ref, max_enum, json_out);
    if (*components) return cmd_components(instance_ref, element, max_enum, json_out);
    if (*catalog_cmd) return cmd_catalog(list, dump_dir);
  } catch (const EnumerationCapExceeded& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
