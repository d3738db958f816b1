// Command line front end. Every subcommand prints one JSON report on stdout.
// Exit status: 0 success, 1 usage or validation error, 2 computation error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spinetorsion/io.hpp"
#include "spinetorsion/report.hpp"

using namespace spinetorsion;

namespace {

struct Options {
  std::string file;
  std::optional<int> face, variant, edge;
  int steps = 0;
  std::uint64_t seed = 0;
  bool h_null_only = false;
  int max_tets = 6;
  std::string rep = "trivial";
  bool sign_refined = false;
  std::string homology_basis = "none";
  int tets = 1;
  std::string output;
  std::string log;
  std::string save_log;
  bool timing = false;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpineError(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

json run(const std::string& cmd, const Options& o) {
  if (cmd == "census") {
    json r = census_report(o.tets, true);
    if (!o.output.empty()) {
      std::filesystem::create_directories(o.output);
      int i = 0;
      for (const auto& s : r["spines"])
        write_text(o.output + "/census" + std::to_string(o.tets) + "_" + std::to_string(i++) + ".spine",
                   s["spine"].get<std::string>());
    }
    return r;
  }
  const BranchedSpine spine = read_spine_file(o.file);
  if (cmd == "validate") return validate_report(spine);
  if (cmd == "summary") return summary_report(spine);
  if (cmd == "branchings") return branchings_report(spine);
  if (cmd == "euler") return euler_report(spine);
  if (cmd == "hcheck") return hcheck_report(spine, *o.face, o.variant.value_or(0));
  if (cmd == "torsion")
    return torsion_report(spine, RepSpec::parse(o.rep), o.sign_refined, o.homology_basis == "auto");
  if (cmd == "invariance") return invariance_report(spine, o.steps, o.seed, RepSpec::parse(o.rep), o.max_tets);
  if (cmd == "move" && !o.log.empty()) {
    std::ifstream in(o.log, std::ios::binary);
    if (!in) throw SpineError(ErrorCode::InvalidArgument, "cannot read " + o.log);
    json r = replay_report(spine, std::string(std::istreambuf_iterator<char>(in), {}));
    if (!o.output.empty()) write_text(o.output, r["spine"].get<std::string>());
    return r;
  }
  if (cmd == "move") {
    json r = move_report(spine, o.face, o.variant, o.edge);
    if (!o.output.empty()) {
      if (r["moves"].size() != 1)
        throw SpineError(ErrorCode::InvalidArgument, "--output needs a single move; pass --variant");
      write_text(o.output, r["moves"][0]["spine"].get<std::string>());
    }
    return r;
  }
  if (cmd == "walk") {
    json r = walk_report(spine, o.steps, o.seed, o.h_null_only, o.max_tets);
    if (!o.output.empty()) write_text(o.output, r["spine"].get<std::string>());
    if (!o.save_log.empty()) write_text(o.save_log, r["log"].get<std::string>());
    return r;
  }
  throw SpineError(ErrorCode::InvalidArgument, "unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branched spines, sliding moves and Reidemeister torsion"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--timing", o.timing, "Add wall-clock time to the report");

  auto file_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("FILE", o.file, "Spine file")->required()->check(CLI::ExistingFile);
    return c;
  };
  file_cmd("validate", "Validate a spine file");
  file_cmd("branchings", "List every branching of the underlying triangulation");
  file_cmd("summary", "Vertices, edges, Euler characteristics, H1 and boundary");
  file_cmd("euler", "Euler chain and maw cochain with their H1 classes");

  CLI::App* move = file_cmd("move", "Apply a 2-3 move at a face or a 3-2 move at an edge");
  auto* face_opt = move->add_option("--face", o.face, "Face class for a 2-3 move");
  move->add_option("--variant", o.variant, "Orientation of the new edge (0 or 1)")->needs(face_opt);
  auto* edge_opt = move->add_option("--edge", o.edge, "Edge class for a 3-2 move");
  auto* log_opt = move->add_option("--log", o.log, "Replay a move log instead")->check(CLI::ExistingFile);
  face_opt->excludes(edge_opt);
  log_opt->excludes(face_opt)->excludes(edge_opt);
  move->add_option("--output", o.output, "Write the resulting spine here");

  CLI::App* walk = file_cmd("walk", "Seeded random walk of moves");
  walk->add_option("--steps", o.steps, "Number of moves")->required()->check(CLI::NonNegativeNumber);
  walk->add_option("--seed", o.seed, "Seed of the mt19937_64 generator")->required();
  walk->add_flag("--h-null-only", o.h_null_only, "Only take moves with a null h-table");
  walk->add_option("--max-tets", o.max_tets, "No 2-3 moves beyond this many tetrahedra")->capture_default_str();
  walk->add_option("--output", o.output, "Write the final spine here");
  walk->add_option("--save-log", o.save_log, "Write the move log here");

  CLI::App* hcheck = file_cmd("hcheck", "The 21-row h-cycle table of a 2-3 move");
  hcheck->add_option("--face", o.face, "Face class")->required();
  hcheck->add_option("--variant", o.variant, "Orientation of the new edge (0 or 1)")->required();

  auto rep_options = [&](CLI::App* c) {
    c->add_option("--rep", o.rep, "trivial, free-abelian, cyclic:N or cyclic:N:CHAR")->capture_default_str();
  };
  CLI::App* torsion = file_cmd("torsion", "Reidemeister torsion of the dual complex");
  rep_options(torsion);
  torsion->add_flag("--sign-refined", o.sign_refined, "Fix the sign with the homological orientation");
  torsion->add_option("--homology-basis", o.homology_basis, "none or auto")
      ->check(CLI::IsMember({"none", "auto"}))
      ->capture_default_str();

  CLI::App* inv = file_cmd("invariance", "Torsion along a seeded h-null walk");
  inv->add_option("--steps", o.steps, "Number of moves")->required()->check(CLI::NonNegativeNumber);
  inv->add_option("--seed", o.seed, "Seed of the mt19937_64 generator")->required();
  inv->add_option("--max-tets", o.max_tets, "No 2-3 moves beyond this many tetrahedra")->capture_default_str();
  rep_options(inv);

  CLI::App* cen = app.add_subcommand("census", "Enumerate branched spines up to isomorphism");
  cen->add_option("--tets", o.tets, "Number of tetrahedra")->required()->check(CLI::PositiveNumber);
  cen->add_option("--output-dir", o.output, "Write one spine file per result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  json report{{"command", cmd}};
  if (!o.file.empty()) report["file"] = o.file;
  int status = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    report["result"] = run(cmd, o);
  } catch (const SpineError& e) {
    report.update(error_report(e));
    status = is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    report["error"] = {{"code", "Internal"}, {"message", e.what()}};
    status = 2;
  }
  if (o.timing)
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << "\n";
  return status;
}
