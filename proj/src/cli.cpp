#include "ore/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "ore/report.hpp"

namespace ore {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// First "# ..." line of a spec file, without the marker.
std::string description(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) return line.substr(2);
    if (!line.empty() && line[0] != '#') break;
  }
  return "";
}

}  // namespace

std::filesystem::path shipped_spec_dir() { return ORE_SPEC_DIR; }

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ore extension analysis over non-associative coefficient rings", "ore"};
  app.require_subcommand(1);

  std::string run_path, check_path, format = "text", caps_text;
  std::uint64_t seed = 1;
  CLI::App* run_cmd = app.add_subcommand("run", "Run the tasks of a spec file and print a report");
  run_cmd->add_option("spec", run_path, "Spec file")->required();
  run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  run_cmd->add_option("--caps", caps_text, "Cap override, X=<n>,Y=<m>,rounds=<k>");
  run_cmd->add_option("--seed", seed, "Seed for randomized suites");
  CLI::App* check_cmd = app.add_subcommand("check", "Parse and validate a spec file");
  check_cmd->add_option("spec", check_path, "Spec file")->required();
  CLI::App* examples_cmd = app.add_subcommand("examples", "List the shipped example specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (examples_cmd->parsed()) {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(shipped_spec_dir(), ec)) {
      if (e.path().extension() == ".spec") files.push_back(e.path());
    }
    if (ec) {
      err << "error: cannot list " << shipped_spec_dir().string() << ": " << ec.message() << "\n";
      return kUsage;
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      out << f.stem().string() << "  " << description(read_file(f.string()).value_or("")) << "  " << f.string()
          << "\n";
    }
    return kOk;
  }

  const std::string& path = run_cmd->parsed() ? run_path : check_path;
  const auto text = read_file(path);
  if (!text) {
    err << "error: cannot read " << path << "\n";
    return kUsage;
  }
  RingSpecFile spec;
  try {
    spec = parse_spec(*text);
  } catch (const ParseError& e) {
    err << path << ":" << e.what() << "\n";
    return kUsage;
  }
  if (check_cmd->parsed()) {
    out << path << ": ok, " << spec.tasks.size() << " task(s)\n";
    return kOk;
  }

  RunOptions options;
  options.seed = seed;
  if (!caps_text.empty()) {
    try {
      options.caps = parse_caps(caps_text);
    } catch (const ParseError& e) {
      err << "--caps: " << e.message() << " (column " << e.column() << ")\n";
      return kUsage;
    }
  }
  const Report report = run(spec, options);
  out << render_report(report, format == "structured" ? ReportFormat::structured : ReportFormat::text);
  for (std::size_t i = 0; i < report.tasks.size(); ++i) {
    if (!report.tasks[i].ok) err << "task " << i + 1 << " (" << to_string(report.tasks[i].kind) << "): " << report.tasks[i].error << "\n";
  }
  return report.exit_status();
}

}  // namespace ore
