#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "rackhom/catalog.hpp"
#include "rackhom/io.hpp"

using nlohmann::json;
namespace rh = rackhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapStrict = 3;

struct GroupSource {
  std::string catalog_name;
  std::string cayley_path;
  std::string perms_path;

  void add_flags(CLI::App* cmd) {
    auto* a = cmd->add_option("--catalog", catalog_name, "built-in group by name");
    auto* b = cmd->add_option("--cayley", cayley_path,
                              "JSON Cayley table file ('-' for stdin)");
    auto* c = cmd->add_option("--perms", perms_path,
                              "JSON permutation-generators file ('-' for stdin)");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  std::pair<rh::FiniteGroup, std::string> load() const {
    if (!catalog_name.empty()) {
      const auto* e = rh::catalog_find(catalog_name);
      if (!e) throw rh::Error("unknown catalog group: " + catalog_name);
      return {e->build(), e->name};
    }
    const std::string& path = cayley_path.empty() ? perms_path : cayley_path;
    if (path.empty()) throw rh::Error("no group source given");
    json j;
    if (path == "-") {
      std::cin >> j;
    } else {
      std::ifstream in(path);
      if (!in) throw rh::Error("cannot open " + path);
      in >> j;
    }
    return {rh::group_from_json(j), path};
  }
};

int cmd_catalog() {
  for (const auto& e : rh::catalog())
    std::cout << e.name << "\torder " << e.order << "\t" << e.description << "\n";
  return kExitOk;
}

int cmd_verify(const GroupSource& src, const rh::VerifyOptions& opts,
               const std::string& json_path, bool strict, bool timings) {
  auto [G, name] = src.load();
  rh::GroupReport rep = rh::verify_group(G, opts, name);
  std::cout << rh::report_to_text(rep, timings);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw rh::Error("cannot write " + json_path);
    out << rh::report_to_json(rep, timings).dump(2) << "\n";
  }
  if (rep.overall == rh::VerdictStatus::Fails) {
    std::cout << "*** CLAIM FALSIFIED on " << name << " ***\n";
    return kExitFalsified;
  }
  if (strict && rep.any_cap_exceeded) return kExitCapStrict;
  return kExitOk;
}

int cmd_analyze(const GroupSource& src, int class_index, const std::string& class_rep,
                int max_class_size, const std::string& json_path) {
  auto [G, name] = src.load();
  auto classes = rh::conjugacy_classes(G);

  int idx = class_index;
  if (!class_rep.empty()) {
    idx = -1;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (G.label(classes[i].representative) == class_rep) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) throw rh::UnknownClassError("no class with representative label '" +
                                             class_rep + "'");
  }
  if (idx < 0 || idx >= static_cast<int>(classes.size()))
    throw rh::UnknownClassError("class index " + std::to_string(idx) +
                                " out of range");

  const auto& C = classes[idx];
  if (C.size() > max_class_size)
    throw rh::CapExceededError(C.size(), max_class_size);

  rh::Rack R = rh::conjugation_rack(G, C);
  rh::Subgroup H = rh::subgroup_generated(G, C.member_list);
  rh::OrbitDecomposition orbits = rh::orbit_decomposition(G, C, H);
  rh::SubrackPoset P = rh::enumerate_subracks(
      R, std::max(max_class_size, rh::kDefaultEnumerationCap));
  rh::OrderComplex K = rh::order_complex(P);
  rh::HomologyProfile hom = rh::reduced_homology(K);

  json out = {{"format", 1},
              {"group", name},
              {"class_index", idx},
              {"rep_label", G.label(C.representative)},
              {"class_members", C.member_list},
              {"h_order", H.order()},
              {"orbits", rh::orbits_to_json(orbits, R)},
              {"poset", rh::poset_to_json(P, R)},
              {"complex", rh::complex_to_json(K)},
              {"homology", rh::homology_to_json(hom)}};
  std::cout << out.dump(2) << "\n";
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw rh::Error("cannot write " + json_path);
    f << out.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugacy class racks: subrack posets, order complexes, homology, "
               "and claim verification"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "list built-in groups");

  auto* ver = app.add_subcommand("verify", "run every claim against a group");
  GroupSource ver_src;
  ver_src.add_flags(ver);
  rh::VerifyOptions opts;
  std::string ver_json;
  bool strict = false, timings = false;
  ver->add_option("--max-class-size", opts.max_class_size,
                  "per-class enumeration cap")->capture_default_str();
  ver->add_option("--seed", opts.seed, "seed for randomized validators")
      ->capture_default_str();
  ver->add_flag("--experimental-nilpotent", opts.experimental_nilpotent,
                "also assert the properness/connectedness claims on nilpotent "
                "non-p-groups (experimental)");
  ver->add_flag("--no-parallel", [&opts](std::int64_t) { opts.parallel = false; },
                "verify classes sequentially");
  ver->add_option("--json", ver_json, "write the JSON report to PATH");
  ver->add_flag("--strict", strict, "exit 3 when any class exceeds the cap");
  ver->add_flag("--timings", timings, "include per-class wall times in output");

  auto* ana = app.add_subcommand("analyze",
                                 "orbit/poset/complex/homology dump for one class");
  GroupSource ana_src;
  ana_src.add_flags(ana);
  int class_index = 0;
  std::string class_rep, ana_json;
  int ana_cap = 20;
  ana->add_option("--class-index", class_index, "class by index")
      ->capture_default_str();
  ana->add_option("--class-rep", class_rep, "class by representative label");
  ana->add_option("--max-class-size", ana_cap, "enumeration cap")
      ->capture_default_str();
  ana->add_option("--json", ana_json, "also write the dump to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (cat->parsed()) return cmd_catalog();
    if (ver->parsed()) return cmd_verify(ver_src, opts, ver_json, strict, timings);
    if (ana->parsed()) return cmd_analyze(ana_src, class_index, class_rep, ana_cap,
                                          ana_json);
  } catch (const rh::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapStrict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
