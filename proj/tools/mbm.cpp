#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mbm/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for multiplier bimonoids over GF(p) and their simplicial models"};
  app.require_subcommand(1);

  std::string path, target, group, algebra = "fun";
  bool regular = false, strong = false, derived = false, count_only = false, nondegenerate = false;
  long n = 0;
  unsigned p = 2;

  auto* check = app.add_subcommand("check", "Run the structure suites on a structure file");
  check->add_option("file", path, "Structure file")->required();
  check->add_flag("--regular", regular, "Check the regular suite (needs t3, t4, e_prime)");
  check->add_flag("--strong", strong, "Add the strong-regular diagrams (implies --regular)");
  check->add_flag("--derived", derived, "Add the derived identities (e)..(t) (implies --regular)");

  auto* catalan = app.add_subcommand("catalan", "Enumerate simplices of the Catalan simplicial set");
  catalan->add_option("n", n, "Dimension")->required();
  catalan->add_flag("--count-only", count_only, "Print only the number of simplices");
  catalan->add_flag("--nondegenerate", nondegenerate, "List only non-degenerate simplices");

  auto* map = app.add_subcommand("map", "Build the simplicial map from the Catalan simplicial set");
  map->add_option("file", path, "Structure file")->required();
  map->add_option("target", target, "m1, m2, m3, m4, m12, m34 or m")->required();
  map->add_flag("--strong", strong, "Use the strong 3-simplex conditions for target m");

  auto* example = app.add_subcommand("example", "Write a generated structure file to stdout");
  example->add_option("group", group, "trivial, z<n>, v4, s3 or a group table file")->required();
  example->add_option("p", p, "Prime")->required();
  example->add_option("--algebra", algebra, "fun (function algebra) or group (group algebra)");
  example->add_flag("--regular", regular, "Search for and include t3, t4, e_prime");

  auto* comonoid = app.add_subcommand("comonoid", "Comonoid in M, Q-membership and the multiplier monoid");
  comonoid->add_option("file", path, "Structure file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : mbm::cli::kUsage;
  }

  if (*check) return mbm::cli::cmd_check(path, regular, strong, derived, std::cout, std::cerr);
  if (*catalan) return mbm::cli::cmd_catalan(n, count_only, nondegenerate, std::cout, std::cerr);
  if (*map) return mbm::cli::cmd_map(path, target, strong, std::cout, std::cerr);
  if (*example) return mbm::cli::cmd_example(group, p, algebra, regular, std::cout, std::cerr);
  if (*comonoid) return mbm::cli::cmd_comonoid(path, std::cout, std::cerr);
  return mbm::cli::kUsage;
}
