#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "jobs.hpp"

#ifndef TANVAR_GOLDEN_FILE
#define TANVAR_GOLDEN_FILE ""
#endif

using tanvar::cli::json;

namespace {

void print_table(const json& report, std::ostream& os) {
  os << "entry                      ok   deg_V deg_TV deg_Tan omega deg_TC\n";
  for (const auto& row : report["summary"]) {
    auto cell = [&](const char* key) { return row.contains(key) ? row[key].dump() : std::string("-"); };
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %-4s %5s %6s %7s %5s %6s\n", row["name"].get<std::string>().c_str(),
                  row["ok"].get<bool>() ? "yes" : "NO", cell("deg_V").c_str(), cell("deg_TV").c_str(),
                  cell("deg_Tan").c_str(), cell("omega").c_str(), cell("deg_TC").c_str());
    os << line;
  }
  if (report.contains("properties"))
    for (const auto& p : report["properties"])
      os << "property " << p["name"].get<std::string>() << ": " << p["cases"] << " cases, " << p["failures"] << " failures\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tanvar: tangent bundles, tangential varieties and their degrees"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string field = "", in_path, out_path, golden = TANVAR_GOLDEN_FILE;
  std::uint64_t prime = tanvar::kDefaultPrime, seed = 0;
  tanvar::cli::Options opts;
  bool compact = false, table = false;
  app.add_option("--field", field, "coefficient field: q (rationals) or fp (prime field)")->check(CLI::IsMember({"q", "fp"}));
  auto* prime_opt = app.add_option("--prime", prime, "characteristic for --field fp");
  auto* seed_opt = app.add_option("--seed", seed, "PRNG seed (recorded in the report)");
  app.add_option("--budget-pairs", opts.budget.max_pairs, "cap on S-pair reductions per Groebner basis");
  app.add_option("--budget-monomials", opts.budget.max_monomials, "cap on monomials held during a Groebner basis");
  app.add_flag("--exact-smoothness", opts.exact_smoothness, "search the singular locus exactly instead of sampling");
  app.add_flag("--cross-check", opts.cross_check, "also compute degrees by random linear sections");
  app.add_option("--in", in_path, "job JSON file (default: stdin)");
  app.add_option("--out", out_path, "report file (default: stdout)");
  app.add_flag("--compact", compact, "single-line JSON output");
  app.add_option("--golden", golden, "golden file for the corpus");
  app.add_flag("--table", table, "print the corpus summary table to stderr");

  std::string command;
  for (const auto& name : tanvar::cli::command_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " command");
    sub->callback([&command, name] { command = name; });
    if (name == "corpus") sub->add_flag("--properties", opts.properties, "also run the randomized property suites");
  }
  CLI11_PARSE(app, argc, argv);

  tanvar::cli::Outcome out;
  try {
    if (!field.empty()) opts.field = field == "q" ? tanvar::FieldSpec::rationals() : tanvar::FieldSpec::prime(prime);
    else if (*prime_opt) opts.field = tanvar::FieldSpec::prime(prime);
    if (*seed_opt) opts.seed = seed;
    opts.golden_path = golden;

    std::string text;
    if (command != "corpus" || !in_path.empty()) {
      if (in_path.empty()) {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(in_path);
        if (!in) tanvar::fail(tanvar::ErrorKind::Input, "cannot open " + in_path);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
    }
    out = tanvar::cli::run_text(text, command, opts);
  } catch (const tanvar::Error& e) {
    out = tanvar::cli::error_outcome(json{{"command", command}}, tanvar::to_string(e.kind()), e.what(),
                                     tanvar::cli::exit_code_for(e.kind()));
  }

  const std::string dumped = out.report.dump(compact ? -1 : 2) + "\n";
  if (out_path.empty()) {
    std::cout << dumped;
  } else {
    std::ofstream os(out_path);
    os << dumped;
  }
  if (table && out.report.contains("summary")) print_table(out.report, std::cerr);
  if (out.report.contains("error")) std::cerr << "error (" << out.report["error"]["kind"].get<std::string>() << "): "
                                              << out.report["error"]["message"].get<std::string>() << "\n";
  return out.exit_code;
}
