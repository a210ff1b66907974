#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace trimoments::cli;

namespace {

const std::vector<std::string> kMethods = {"direct", "recursive", "integration", "composition",
                                           "montecarlo"};

void add_common(CLI::App* sub, Options& opt, bool& json) {
  sub->add_option("--word", opt.word, "Word over T and T*, e.g. \"T T*\" or \"(T^2 T*^2)^3\"");
  sub->add_option("--k", opt.k, "Block length k of (T^k T*^k)^n");
  sub->add_option("--n", opt.n, "Repetitions n of (T^k T*^k)^n");
  sub->add_option("--max-nk", opt.max_nk, "Enumeration bound on nk")->capture_default_str();
  sub->add_option("--method", opt.method, "Computation method")
      ->check(CLI::IsMember(kMethods));
  sub->add_option("--samples", opt.samples, "Monte Carlo sample count");
  sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  sub->add_option("--dim", opt.dim, "Random matrix dimension N")->capture_default_str();
  sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores, 1 = serial)")
      ->capture_default_str();
  sub->add_flag("--json", json, "Print the report as JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact moments of the triangular operator"};
  app.require_subcommand(1);

  Options opt;
  bool json = false;
  std::function<Report(const Options&)> run;

  auto add = [&](const char* name, const char* help, Report (*cmd)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, opt, json);
    sub->callback([&run, cmd] { run = cmd; });
    return sub;
  };
  add("moment", "E(w) and phi(w) of a word, with cross-checks", cmd_moment);
  add("verify", "phi[(T^k T*^k)^n] = n^{nk}/(nk+1)! over the (k, n) grid", cmd_verify);
  add("identity", "Both sides of the multinomial identity for (n, k)", cmd_identity)
      ->add_flag("--terms", opt.terms, "Dump phi of every admissible partition");
  add("volume", "Volume of the staircase polytope V_{k,n}", cmd_volume);
  add("randmat", "Random triangular matrix estimate of phi(w)", cmd_randmat);
  add("enumerate", "Admissible noncrossing pair partitions of a word", cmd_enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    const Report report = run(opt);
    std::cout << (json ? render_json(report) + "\n" : render_text(report));
    return report.passed() ? kExitPass : kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
