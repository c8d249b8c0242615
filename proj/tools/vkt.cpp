#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vkt/cli/commands.hpp"
#include "vkt/cli/jobspec.hpp"
#include "vkt/error.hpp"

namespace {

std::vector<std::int64_t> int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw vkt::Error(vkt::ErrorKind::InvalidArgument, "malformed " + what + " '" + s + "'");
  }
  return out;
}

vkt::IntMatrix json_matrix(const std::string& s, const std::string& what) {
  try {
    const auto j = nlohmann::json::parse(s);
    return vkt::IntMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>());
  } catch (const nlohmann::json::exception&) {
    throw vkt::Error(vkt::ErrorKind::InvalidArgument, what + " must be a JSON integer matrix like [[2,1],[1,2]]");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verlinde rings as twisted equivariant K-theory"};
  std::string command, group, spec_file, twist, epsilon, shift, torus, bmat, format;
  std::vector<std::string> positionals;
  bool numeric_shadow = false;
  vkt::cli::RunOptions opt;

  app.add_option("command", command, "info | basis | classes | fuse | table | verify | example");
  app.add_option("args", positionals, "group (when --group is absent), then command arguments");
  app.add_option("--group", group, "group, e.g. \"SU(2) x U(1)\"");
  app.add_option("--spec", spec_file, "job file with group and twist");
  app.add_option("--twist", twist, "total twist per level slot, comma separated");
  app.add_option("--epsilon", epsilon, "grading ε, comma separated");
  app.add_option("--shift", shift, "dual_coxeter: add h^vee to every simple slot")->check(CLI::IsMember({"none", "dual_coxeter"}));
  app.add_option("--torus", torus, "symmetric form on the torus block, JSON matrix");
  app.add_option("--b", bmat, "the whole matrix of b, JSON matrix");
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--numeric-shadow", numeric_shadow, "add floating-point character values to `classes`");
  app.add_option("--height", opt.verify.height, "weight height searched by `verify`");
  app.add_option("--trials", opt.verify.trials, "random trials per `verify` suite");
  app.add_option("--seed", opt.verify.seed, "seed for `verify`");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  opt.numeric_shadow = numeric_shadow;

  std::string out_format = "json";
  try {
    vkt::cli::JobSpec spec;
    if (!spec_file.empty()) {
      std::ifstream in(spec_file);
      if (!in) throw vkt::Error(vkt::ErrorKind::InvalidArgument, "cannot read " + spec_file);
      std::stringstream text;
      text << in.rdbuf();
      spec = vkt::cli::parse_jobspec(text.str());
    }
    if (!command.empty()) spec.command = command;
    if (spec.command.empty()) throw vkt::Error(vkt::ErrorKind::InvalidArgument, "no command given");

    std::size_t next = 0;
    if (!group.empty()) {
      spec.group = vkt::GroupSpec{};
      spec.group.name = group;
    } else if (spec.command != "example" && spec.group.name.empty() && !spec.group.cartan &&
               !spec.group.simple_roots && next < positionals.size()) {
      spec.group.name = positionals[next++];
    }
    if (next < positionals.size() || !command.empty())
      spec.args.assign(positionals.begin() + static_cast<std::ptrdiff_t>(next), positionals.end());

    if (!twist.empty()) spec.twist.levels = int_list(twist, "twist");
    if (!epsilon.empty()) spec.twist.epsilon = int_list(epsilon, "epsilon");
    if (!shift.empty()) spec.twist.dual_coxeter_shift = shift == "dual_coxeter";
    if (!torus.empty()) spec.twist.torus = json_matrix(torus, "--torus");
    if (!bmat.empty()) spec.twist.b = json_matrix(bmat, "--b");
    if (!format.empty()) spec.format = format;
    out_format = spec.format;

    const auto outcome = vkt::cli::run_job(spec, opt);
    if (out_format == "tsv") std::cout << vkt::cli::to_tsv(outcome.report);
    else std::cout << outcome.report.dump(2) << "\n";
    return outcome.exit_code;
  } catch (const std::exception& e) {
    const auto err = vkt::cli::error_report(e);
    if (out_format == "tsv") std::cout << vkt::cli::to_tsv(err);
    else std::cout << err.dump(2) << "\n";
    return 2;
  }
}
