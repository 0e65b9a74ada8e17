#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "invsemi/instance.hpp"
#include "invsemi/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups: congruences, partial actions, "
               "semidirect products and L-triples"};

  std::string                verb;
  std::string                input;
  std::string                family;
  std::size_t                param = 0;
  std::string                out_path;
  invsemi::Flags             flags;

  app.add_option("verb", verb, "validate | orders | congruences | quotient | "
                               "munn | lift | product | embed | globalizable | "
                               "ltriple | certify-all")
      ->required();
  auto* in_opt = app.add_option("--input", input, "instance file");
  auto* fam_opt =
      app.add_option("--family", family, "built-in instance: In, chain, cyclic, vexample");
  app.add_option("--param", param, "parameter of the built-in family");
  app.add_option("--max-n", flags.max_n, "largest semigroup for certify-all")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  in_opt->excludes(fam_opt);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  invsemi::Report report;
  try {
    std::optional<invsemi::InstanceFile> inst;
    if (!input.empty()) {
      inst = invsemi::parse_instance_file(input);
    } else if (!family.empty()) {
      inst = invsemi::generate(family, param);
    }
    report = invsemi::run_command(verb, inst, flags);
  } catch (invsemi::Error const& e) {
    report = {std::string("ERROR ") + e.what() + "\n", 2};
  }

  if (out_path.empty()) {
    std::cout << report.text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "ERROR IOError: cannot write " << out_path << "\n";
      return 2;
    }
    out << report.text;
  }
  return report.exit_code;
}
