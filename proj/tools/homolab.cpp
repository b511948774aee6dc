#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homolab/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw homolab::Error(homolab::ErrorCode::ValidationError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::string& path, const std::string& text) {
  auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw homolab::Error(homolab::ErrorCode::ValidationError, "cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homolab: homological invariants and certificates for Artinian graded algebras"};
  std::string command, input, out, range, gg, invariants;
  homolab::CommandOptions opts;
  bool no_cache = false;
  app.add_option("command", command, "command to run")
      ->required()
      ->check(CLI::IsMember(homolab::command_names()));
  app.add_option("input", input, "input file (.alg)");
  app.add_option("--steps", opts.steps, "resolution length")->check(CLI::Range(0, 200));
  app.add_option("--range", range, "homological range lo..hi");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--assert-gg", gg, "asserted generalized-Golod classes, comma separated");
  app.add_option("--invariants", invariants, "asserted invariants e=..,c=..,ell=..,tau=..,mu2=..[,muI=..]");
  app.add_option("--module", opts.module, "module name (k, A, omega or a [module] section)");
  app.add_option("--m", opts.m, "first module");
  app.add_option("--n", opts.n, "second module");
  app.add_option("--window", opts.window, "ratio window for growth diagnostics")->check(CLI::Range(1, 100));
  app.add_flag("--no-cache", no_cache, "do not read or write the resolution cache");
  CLI11_PARSE(app, argc, argv);

  try {
    if (!range.empty()) opts.range = homolab::parse_range(range);
    if (!invariants.empty()) opts.invariants = homolab::parse_invariant_list(invariants);
    if (!gg.empty())
      for (const auto& f : homolab::detail::split({gg, 1, 1}, ','))
        if (!f.text.empty()) opts.assert_gg.push_back(f.text);
    std::string text;
    homolab::SessionInput session;
    if (!input.empty()) {
      text = read_file(input);
      session = homolab::parse_input(text);
    } else if (opts.invariants.empty()) {
      throw homolab::Error(homolab::ErrorCode::ValidationError, "an input file or --invariants is required");
    }
    auto cache = no_cache ? homolab::ResolutionCache() : homolab::ResolutionCache::from_environment();
    homolab::CommandRunner runner(std::move(session), std::move(text), opts, std::move(cache));
    bool failed = false;
    auto report = runner.run(command, failed).dump(2) + "\n";
    if (out.empty())
      std::cout << report;
    else
      write_atomically(out, report);
    return failed ? 3 : 0;
  } catch (const homolab::Error& e) {
    std::cerr << "homolab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "homolab: " << e.what() << "\n";
    return 2;
  }
}
