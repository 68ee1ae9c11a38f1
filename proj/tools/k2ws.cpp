#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "k2ws/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"workbench for augmented algebra presentations"};
  app.require_subcommand(1);

  std::string file;
  k2ws::RunOptions opts;
  int bound = -1;
  int nmax = -1;
  std::string field;

  const char* names[] = {"gb", "gr", "hilbert", "essential",
                         "ext", "k2", "lift", "face"};
  const char* blurbs[] = {
      "complete the relations to a rewriting basis",
      "minimal generators of the leading word ideal",
      "coefficients of the Hilbert series below the bound",
      "compare essential counts with leading word generators",
      "cohomology dimensions by level and degree",
      "test generation by level 1 and 2 classes",
      "lift classes of the associated monomial algebra",
      "simplicial complex pipeline"};
  for (int i = 0; i < 8; ++i) {
    auto* sub = app.add_subcommand(names[i], blurbs[i]);
    sub->add_option("file", file, "job file")->required();
    sub->add_option("--bound", bound, "degree truncation bound");
    sub->add_option("--nmax", nmax, "top cohomological level");
    sub->add_option("--field", field, "coefficient field, QQ or GF(p)");
    sub->add_flag("--json", opts.json, "emit one json object");
    sub->add_flag("--search-orderings", opts.search_orderings,
                  "search vertex orderings of a complex");
  }

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot read " << file << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  if (bound >= 0) opts.bound = bound;
  if (nmax >= 0) opts.nmax = nmax;
  if (!field.empty()) opts.field = field;

  auto t0 = std::chrono::steady_clock::now();
  auto out = k2ws::run_job(app.get_subcommands().front()->get_name(),
                           buf.str(), opts);
  auto t1 = std::chrono::steady_clock::now();
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  std::cerr << "elapsed: " << ms << "ms\n";

  if (out.exit_code == 1)
    std::cerr << out.text;
  else
    std::cout << out.text;
  return out.exit_code;
}
