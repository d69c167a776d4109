#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "junior/cli.hpp"

int main(int argc, char** argv) {
  using junior::Command;
  using junior::Format;

  CLI::App app{"G-Hilbert resolutions and tangent-sheaf deformations of C^3/Z_r"};
  app.require_subcommand(1);

  junior::RunConfig config;
  std::string format = "default";
  const std::map<std::string, Format> formats{
      {"default", Format::Default}, {"json", Format::Json}, {"dot", Format::Dot},
      {"tikz", Format::Tikz},       {"text", Format::Text}};

  const std::map<std::string, std::pair<Command, std::string>> commands{
      {"info", {Command::Info, "normalized action, lattice points, charge matrix, continued fractions"}},
      {"sectors", {Command::Sectors, "twisted sectors and their singlets"}},
      {"hilb", {Command::Hilb, "G-Hilbert triangulation"}},
      {"quiver", {Command::Quiver, "singlet quiver, or Ext-quiver with --ext"}},
      {"deform", {Command::Deform, "deformation report for --hilb or --triangulation FILE"}},
      {"sweep", {Command::Sweep, "totals over every crepant triangulation"}},
      {"verify", {Command::Verify, "full invariant suite up to --rmax"}},
  };

  std::string triangulation_file;
  std::int64_t bound = 0;
  std::size_t term_cap = 0, tri_cap = 0;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    const Command cmd = entry.first;
    sub->callback([&config, cmd] { config.command = cmd; });
    sub->add_option("--format", format, "json | dot | tikz | text")
        ->check(CLI::IsMember({"default", "json", "dot", "tikz", "text"}));
    if (cmd == Command::Verify) {
      sub->add_option("--rmax", config.rmax, "largest r to check");
      sub->add_option("--minimality-rmax", config.minimality_rmax, "largest r for flip-graph sweeps");
    } else {
      sub->add_option("action", config.action, "r w1 w2 w3")->expected(0, 4);
    }
    if (cmd == Command::Deform || cmd == Command::Quiver) {
      sub->add_flag("--hilb", config.hilb, "use the G-Hilbert triangulation");
      sub->add_option("--triangulation", triangulation_file, "triangulation JSON file");
    }
    if (cmd == Command::Quiver) sub->add_flag("--ext", config.ext, "Ext-quiver of a triangulation");
    sub->add_option("--bound", bound, "initial enumeration bound B (default 2r)");
    sub->add_option("--term-cap", term_cap, "series term cap");
    sub->add_option("--tri-cap", tri_cap, "triangulation enumeration cap");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : junior::kExitInvalid;
  }

  config.format = formats.at(format);
  if (!triangulation_file.empty()) config.triangulation_file = triangulation_file;
  if (bound != 0) config.bound = bound;
  if (term_cap != 0) config.term_cap = term_cap;
  if (tri_cap != 0) config.triangulation_cap = tri_cap;
  return junior::run(config, std::cout, std::cerr);
}
