#include "CLI11.hpp"
#include "semiinv/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact semiinvariant differential forms for finite unitary reflection groups"};
  app.require_subcommand(1);

  semiinv::CommandConfig cfg;

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    auto* g = cmd->add_option("--group", cfg.group_file, "group specification JSON file");
    if (needs_group) g->required();
    cmd->add_option("--char", cfg.character, "character spec: det^k, trivial, or a table file");
    cmd->add_option("--degree-cap", cfg.degree_cap, "degree cap for searches and tables");
    cmd->add_option("--output", cfg.output, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", cfg.seed, "seed for sampled property checks");
    cmd->add_option("--data-dir", cfg.data_dir, "directory holding the bundled fixtures");
  };

  auto* info = app.add_subcommand("info", "group order, hyperplanes, basic invariant degrees");
  add_common(info, true);
  auto* qchi = app.add_subcommand("qchi", "Q_chi, Q_{chi det}, a_H table and twist recurrence");
  add_common(qchi, true);
  auto* basis = app.add_subcommand("basis", "find a generator system and its certificate");
  add_common(basis, true);
  auto* saito = app.add_subcommand("saito", "run the generation criterion on a forms file");
  add_common(saito, true);
  saito->add_option("--forms", cfg.forms_file, "JSON file with n 1-forms")->required();
  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions vs the free-module series");
  add_common(hilbert, true);
  auto* logcheck = app.add_subcommand("logcheck", "logarithmic membership and closure battery");
  add_common(logcheck, true);
  auto* verify = app.add_subcommand("verify-g26", "re-verify the bundled order-1296 example");
  add_common(verify, false);
  verify->add_option("--forms", cfg.forms_file, "override the bundled det^3 forms file");

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  return semiinv::run_command(cfg, std::cout);
}
