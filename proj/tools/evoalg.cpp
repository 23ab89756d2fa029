#include <evoalg/cli.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of finite-dimensional evolution algebras"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  if (const char* env = std::getenv("EVOALG_SEED")) seed = std::strtoull(env, nullptr, 10);

  std::string path;
  bool as_json = false;

  auto* info = app.add_subcommand("info", "Annihilator, identities and components of an algebra");
  info->add_option("file", path, "algebra file (JSON)")->required();

  auto* deriv = app.add_subcommand("derivations", "Derivation Lie algebra D(E)");
  deriv->add_option("file", path, "algebra file (JSON)")->required();
  deriv->add_flag("--json", as_json, "machine-readable output");

  auto* inner = app.add_subcommand("inner", "Inner derivation ideal In(E)");
  inner->add_option("file", path, "algebra file (JSON)")->required();

  auto* decomp = app.add_subcommand("decompose", "Natural-basis direct-sum decomposition");
  decomp->add_option("file", path, "algebra file (JSON)")->required();

  auto* cat = app.add_subcommand("catalog", "Bundled algebra families");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List families with their constraints");
  auto* verify = cat->add_subcommand("verify", "Check computed invariants against the ledger");
  std::vector<std::string> verify_args;
  verify->add_option("name_and_params", verify_args,
                     "family name followed by its parameters; empty for all");
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep the 0/1/2 exit-code contract: usage problems are input errors.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : evoalg::cli::kInputError;
  }

  using namespace evoalg;
  if (info->parsed()) return cli::cmd_info(path, std::cout, std::cerr);
  if (deriv->parsed()) return cli::cmd_derivations(path, as_json, std::cout, std::cerr);
  if (inner->parsed()) return cli::cmd_inner(path, std::cout, std::cerr);
  if (decomp->parsed()) return cli::cmd_decompose(path, std::cout, std::cerr);
  if (list->parsed()) return cli::cmd_catalog_list(std::cout);
  if (verify->parsed())
    return cli::cmd_catalog_verify(verify_args, as_json, seed, std::cout, std::cerr);
  return cli::kInputError;
}
