#include "fixedloci/commands.hpp"
#include "fixedloci/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace fixedloci;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus fixed loci of GIT quotients (toric, quiver, Grassmannian, Kempf)"};
  app.set_version_flag("--version", std::string("fixedloci ") + kToolVersion);
  app.require_subcommand(1);

  std::string input, out_path, format = "json", inner_product, support;
  std::uint64_t seed = 0;
  long prime = 0, window = 0;
  int trials = 0;
  bool timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", input, "Problem file (JSON), or - for stdin")->required();
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "dot"}));
    sub->add_flag("--timing", timing, "Include wall-clock timing in the report");
  };
  auto* toric = app.add_subcommand("toric", "Fan and fixed points of a toric quotient");
  auto* quiver = app.add_subcommand("quiver", "Fixed components of a quiver moduli space");
  auto* grass = app.add_subcommand("grassmann", "Fixed loci of a torus acting on a Grassmannian");
  auto* kempf = app.add_subcommand("kempf", "Kempf m-value and adapted one-parameter subgroup");
  for (auto* sub : {toric, quiver, grass, kempf}) add_common(sub);
  auto* seed_opt = quiver->add_option("--seed", seed, "RNG seed for the finite-field oracle");
  auto* prime_opt = quiver->add_option("--prime", prime, "Prime p of the finite-field oracle");
  auto* trials_opt = quiver->add_option("--trials", trials, "Random trials per candidate");
  auto* window_opt = quiver->add_option("--window", window, "Radius r of the grade box [-r, r]^k");
  kempf->add_option("--inner-product", inner_product, "Gram matrix as JSON, e.g. [[2,1],[1,2]]");
  kempf->add_option("--support", support, "Support set as JSON, e.g. [0,2,3]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    RunOptions opts;
    opts.timing = timing;
    if (seed_opt->count()) opts.seed = seed;
    if (prime_opt->count()) opts.prime = prime;
    if (trials_opt->count()) opts.trials = trials;
    if (window_opt->count()) opts.window = window;
    if (!inner_product.empty())
      opts.inner_product = parse_matrix(parse_problem_text(inner_product, "--inner-product"), "--inner-product");
    if (!support.empty()) {
      auto j = parse_problem_text(support, "--support");
      if (!j.is_array()) throw ValidationError("--support: expected an array of coordinate indices");
      SupportSet s;
      for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw ValidationError("--support: expected nonnegative integers");
        s.push_back(x.get<std::size_t>());
      }
      opts.support = s;
    }
    OutputFormat fmt = format == "table" ? OutputFormat::Table
                       : format == "dot" ? OutputFormat::Dot
                                         : OutputFormat::Json;
    auto problem = parse_problem_text(read_file(input), input);
    auto text = render(run_command(chosen->get_name(), problem, opts), fmt);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw ValidationError(out_path + ": cannot write");
      out << text;
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
