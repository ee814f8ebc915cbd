#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "germlab/cli.hpp"

using namespace germlab::cli;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"germlab: invariants of isolated determinantal singularities and their families"};
  std::string command, file, field, t_samples, boardman, out_path;
  std::uint64_t seed = 0;
  std::uint32_t max_degree = 0;
  std::size_t max_spairs = 0;
  bool timings = false;
  app.add_option("command", command, "validate | invariants | family-check | jacobian-extension")
      ->required()
      ->check(CLI::IsMember({"validate", "invariants", "family-check", "jacobian-extension"}));
  app.add_option("file", file, "problem file")->required();
  auto* seed_opt = app.add_option("--seed", seed, "random seed (default: problem file, then GERMLAB_SEED, then 1)");
  app.add_option("--field", field, "q or fp:PRIME");
  app.add_option("--t-samples", t_samples, "comma separated nonzero parameter values, e.g. 1/2,-3");
  auto* deg_opt = app.add_option("--max-degree", max_degree, "degree bound for basis computations");
  auto* sp_opt = app.add_option("--max-spairs", max_spairs, "S-pair bound for basis computations");
  app.add_option("--boardman", boardman, "Boardman symbol for jacobian-extension, e.g. 1,1");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--timings", timings, "add wall-clock timings (breaks byte-identical reports)");
  CLI11_PARSE(app, argc, argv);

  Flags flags;
  if (*seed_opt) flags.seed = seed;
  if (const char* env = std::getenv("GERMLAB_SEED")) {
    try {
      flags.env_seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "germlab: GERMLAB_SEED is not a number\n";
      return kInputError;
    }
  }
  if (!field.empty()) flags.field = field;
  if (!t_samples.empty()) flags.t_samples = split(t_samples);
  if (*deg_opt) flags.max_degree = max_degree;
  if (*sp_opt) flags.max_spairs = max_spairs;
  flags.timings = timings;
  if (!boardman.empty()) {
    for (const auto& b : split(boardman)) {
      if (b.empty() || b.find_first_not_of("0123456789") != std::string::npos) {
        std::cerr << "germlab: --boardman expects positive integers, e.g. 1,1\n";
        return kInputError;
      }
      flags.boardman.push_back(std::stoul(b));
    }
  }

  Problem problem;
  try {
    problem = parse_problem(file);
  } catch (const InputError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kInputError;
  }
  auto outcome = run(parse_command(command), problem, flags);
  auto text = canonical(outcome.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "germlab: cannot write " << out_path << "\n";
      return kInputError;
    }
    out << text;
  }
  if (outcome.exit_code != kOk && outcome.report.contains("error"))
    std::cerr << "germlab: " << outcome.report["error"].get<std::string>() << "\n";
  return outcome.exit_code;
}
