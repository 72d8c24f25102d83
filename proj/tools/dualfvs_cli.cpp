#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dualfvs/dfvs_engine.hpp"
#include "dualfvs/generator.hpp"
#include "dualfvs/instance_io.hpp"
#include "dualfvs/mfvs_engine.hpp"
#include "dualfvs/oracle.hpp"
#include "dualfvs/reductions.hpp"
#include "dualfvs/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << text;
}

// Accepts "1,2,3" as well as "1 2 3".
dualfvs::VertexSet parse_id_list(std::string text) {
  for (char& c : text)
    if (c == ',') c = ' ';
  return dualfvs::parse_solution(text);
}

std::string render_report(const dualfvs::VerifyReport& report, bool minimal_mode) {
  std::ostringstream out;
  for (std::size_t c = 0; c < report.leftover_cycle.size(); ++c) {
    out << "color " << c + 1 << ": ";
    if (report.leftover_cycle[c]) {
      out << "cycle";
      for (int v : report.leftover_cycle[c]->vertices) out << ' ' << v;
    } else {
      out << "acyclic";
    }
    out << '\n';
  }
  if (minimal_mode && report.valid() && !report.droppable.empty())
    out << "droppable: " << dualfvs::format_solution(report.droppable) << '\n';
  out << "verdict: ";
  if (!report.valid()) out << "invalid";
  else if (!minimal_mode) out << "valid";
  else if (report.minimal()) out << "minimal";
  else out << "not-minimal";
  out << '\n';
  return out.str();
}

std::string render_reduced(const dualfvs::ReducedInstance& inst) {
  std::ostringstream out;
  out << dualfvs::encode_instance(inst.graph);
  out << "forced: " << dualfvs::format_solution(inst.forced()) << '\n';
  for (const auto& [rep, members] : inst.forced_choices)
    out << "rep " << rep << " : " << dualfvs::format_solution(members) << '\n';
  for (const auto& [v, members] : inst.represents)
    out << "rep " << v << " : " << dualfvs::format_solution(members) << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dualfvs: solve and enumerate feedback vertex sets on edge-colored graphs"};
  app.require_subcommand(1);

  std::string file, out_path, mode = "dfvs", algo, solution_text, reference_text,
              digraph_file;
  int k = 0;
  dualfvs::GeneratorConfig gen_cfg;

  auto* solve = app.add_subcommand("solve", "find one solution within budget");
  solve->add_option("--k", k, "budget")->required();
  solve->add_option("--mode", mode, "dfvs (two colors) or mfvs")
      ->check(CLI::IsMember({"dfvs", "mfvs"}));
  solve->add_option("--out", out_path, "output file (default stdout)");
  solve->add_option("file", file, "instance file")->required();

  auto* enumerate = app.add_subcommand("enum", "list all minimal solutions within budget");
  enumerate->add_option("--k", k, "budget")->required();
  enumerate->add_option("--algo", algo, "cover, compression, or mfvs")
      ->required()
      ->check(CLI::IsMember({"cover", "compression", "mfvs"}));
  enumerate->add_option("--out", out_path, "output file (default stdout)");
  enumerate->add_option("file", file, "instance file")->required();

  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->set_help_flag("--help", "print help");  // frees -h for the color count
  gen->add_option("--n", gen_cfg.n, "vertex count")->required();
  gen->add_option("--h", gen_cfg.h, "color count")->required();
  gen->add_option("--p", gen_cfg.p, "per-color edge probability")->required();
  gen->add_option("--seed", gen_cfg.seed, "64-bit seed")->required();
  gen->add_flag("--simple", gen_cfg.simple, "no self-loops");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "apply the reduction rules");
  reduce->add_option("--reference", reference_text, "reference vertex ids, e.g. 1,2,3");
  reduce->add_option("--out", out_path, "output file (default stdout)");
  reduce->add_option("file", file, "instance file")->required();

  auto* verify = app.add_subcommand("verify", "check a solution");
  verify->add_option("--solution", solution_text, "vertex ids, e.g. \"1 2\"")->required();
  verify->add_option("--mode", mode, "valid or minimal")
      ->required()
      ->check(CLI::IsMember({"valid", "minimal"}));
  verify->add_option("--out", out_path, "output file (default stdout)");
  verify->add_option("file", file, "instance file")->required();

  auto* convert = app.add_subcommand("convert", "directed graph to alternating two-color instance");
  convert->add_option("--from-digraph", digraph_file, "digraph file")->required();
  convert->add_option("--out", out_path, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "brute-force minimal solution family");
  oracle->add_option("--k", k, "budget")->required();
  oracle->add_option("--out", out_path, "output file (default stdout)");
  oracle->add_option("file", file, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (solve->parsed()) {
      auto g = dualfvs::decode_instance(read_file(file));
      std::optional<dualfvs::VertexSet> sol =
          mode == "mfvs" ? dualfvs::solve_mfvs(g, k) : dualfvs::solve_dfvs(g, k);
      if (!sol) {
        std::cerr << "no solution within budget " << k << '\n';
        return kNoSolution;
      }
      write_output(out_path, dualfvs::format_solution(*sol) + "\n");
      return kOk;
    }

    if (enumerate->parsed()) {
      auto g = dualfvs::decode_instance(read_file(file));
      dualfvs::SetFamily family;
      if (algo == "cover") family = dualfvs::enumerate_dfvs_algoA(g, k);
      else if (algo == "compression") family = dualfvs::enumerate_minimal_dfvs(g, k);
      else family = dualfvs::enumerate_minimal_mfvs(g, k);
      if (family.empty()) {
        std::cerr << "no solution within budget " << k << '\n';
        return kNoSolution;
      }
      write_output(out_path, dualfvs::format_family(family));
      return kOk;
    }

    if (gen->parsed()) {
      write_output(out_path, dualfvs::encode_instance(dualfvs::generate_instance(gen_cfg)));
      return kOk;
    }

    if (reduce->parsed()) {
      auto g = dualfvs::decode_instance(read_file(file));
      auto inst = dualfvs::make_instance(std::move(g), parse_id_list(reference_text));
      auto reduced = dualfvs::reduce_instance(std::move(inst));
      if (!reduced) {
        std::cerr << "infeasible: no solution disjoint from the reference set\n";
        return kNoSolution;
      }
      write_output(out_path, render_reduced(*reduced));
      return kOk;
    }

    if (verify->parsed()) {
      auto g = dualfvs::decode_instance(read_file(file));
      auto report = dualfvs::verify_solution(g, dualfvs::parse_solution(solution_text),
                                             mode == "minimal");
      write_output(out_path, render_report(report, mode == "minimal"));
      bool pass = mode == "minimal" ? report.minimal() : report.valid();
      return pass ? kOk : kNoSolution;
    }

    if (convert->parsed()) {
      auto d = dualfvs::decode_digraph(read_file(digraph_file));
      write_output(out_path, dualfvs::encode_instance(dualfvs::digraph_to_alternating(d)));
      return kOk;
    }

    if (oracle->parsed()) {
      auto g = dualfvs::decode_instance(read_file(file));
      auto family = dualfvs::oracle_minimal_mfvs_family(g, k);
      if (family.empty()) {
        std::cerr << "no solution within budget " << k << '\n';
        return kNoSolution;
      }
      write_output(out_path, dualfvs::format_family(family));
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
