// slnrectify: rectification of polynomial curves in SL_n.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "slnrect/cli.hpp"

namespace {

// "-" reads standard input.
std::optional<std::string> read_file(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rectify polynomial curves in SL_n by automorphisms, and replay the certificates."};
  app.require_subcommand(1);
  app.fallthrough();

  slnrect::RunConfig cfg;
  std::string out_path;
  bool normalize = false;
  app.add_option("--seed", cfg.seed, "Seed for every randomized search")->capture_default_str();
  app.add_option("--max-trials", cfg.max_trials, "Attempts per randomized search")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-degree", cfg.max_payload_degree, "Largest payload degree drawn by searches")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--groebner-budget", cfg.groebner_budget, "Reduction steps allowed per Groebner computation")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", out_path, "Write the result here instead of standard output");

  CLI::App* verify = app.add_subcommand("verify", "Decide whether a curve is an embedding");
  CLI::App* rectify = app.add_subcommand("rectify", "Rectify an embedding (n >= 3) and print a certificate");
  CLI::App* equiv = app.add_subcommand("equiv", "Find a word carrying curve f to curve g");
  CLI::App* apply = app.add_subcommand("apply", "Apply a word to a curve");
  CLI::App* verify_cert = app.add_subcommand("verify-cert", "Replay a certificate");
  CLI::App* lift3 = app.add_subcommand("lift3", "Lift a curve in C^3 to SL_2");
  std::string a_path, b_path;
  verify->add_option("curve", a_path)->required();
  rectify->add_option("curve", a_path)->required();
  equiv->add_option("f", a_path)->required();
  equiv->add_option("g", b_path)->required();
  apply->add_option("word", a_path)->required();
  apply->add_option("curve", b_path)->required();
  verify_cert->add_option("certificate", a_path)->required();
  lift3->add_option("triple", a_path)->required();
  lift3->add_flag("--normalize", normalize, "Search for a tame move making the lift possible first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : slnrect::exit_parse;
  }

  auto load = [](const std::string& path) -> std::optional<std::string> {
    auto body = read_file(path);
    if (!body) std::cerr << "cannot read " << path << "\n";
    return body;
  };
  auto a = load(a_path);
  if (!a) return slnrect::exit_parse;
  std::optional<std::string> b;
  if (!b_path.empty() && !(b = load(b_path))) return slnrect::exit_parse;

  slnrect::CommandResult r;
  if (*verify) r = slnrect::cmd_verify(*a, cfg);
  else if (*rectify) r = slnrect::cmd_rectify(*a, cfg);
  else if (*equiv) r = slnrect::cmd_equiv(*a, *b, cfg);
  else if (*apply) r = slnrect::cmd_apply(*a, *b);
  else if (*verify_cert) r = slnrect::cmd_verify_cert(*a, cfg);
  else r = slnrect::cmd_lift3(*a, cfg, normalize);

  std::cerr << r.err;
  if (out_path.empty()) {
    std::cout << r.out;
    if (!r.aux.empty()) std::cerr << "tame word not written (use --out to save it next to the curve)\n";
  } else {
    if (!r.out.empty() && !write_file(out_path, r.out)) {
      std::cerr << "cannot write " << out_path << "\n";
      return slnrect::exit_internal;
    }
    if (!r.aux.empty() && !write_file(out_path + ".tame", r.aux)) {
      std::cerr << "cannot write " << out_path << ".tame\n";
      return slnrect::exit_internal;
    }
  }
  return r.code;
}
