#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qthook/errors.hpp"
#include "qthook/rational.hpp"
#include "qthook/verify.hpp"

namespace {

qthook::QtPoint parse_qt(const std::string& text) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw qthook::InvalidSpec("--qt wants two rationals, e.g. 1/2,1/3");
  return qthook::make_qt_point(qthook::scalar_parse(text.substr(0, comma)),
                               qthook::scalar_parse(text.substr(comma + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Machine verification of (q,t)-deformed hook product formulas for "
      "reverse plane partitions on shapes, shifted shapes, rooted trees and "
      "d-complete posets."};
  app.get_formatter()->column_width(26);

  std::string target_text;
  app.add_option("target", target_text,
                 "gansner | main_a | main_b | refined | lemma1 | identities | "
                 "conjecture | cross_checks")
      ->required();

  std::string shape_text, shifted_text, tree_text, poset_path, profile_text,
      qt_text, json_path;
  int dk1_k = 0;
  bool two_color = false;
  qthook::VerificationJob job;

  auto* shape_opt =
      app.add_option("--shape", shape_text, "partition rows, e.g. 3,2");
  auto* shifted_opt = app.add_option("--shifted", shifted_text,
                                     "strict partition rows, e.g. 3,1");
  app.add_flag("--two-color", two_color,
               "use distinct z0 / z0' diagonal colors (with --shifted)");
  auto* tree_opt = app.add_option(
      "--tree", tree_text, "rooted tree spec, e.g. \"(a(b)(c(d)))\"");
  auto* dk1_opt =
      app.add_option("--dk1", dk1_k, "double-tailed diamond d_k(1), k >= 3");
  auto* poset_opt =
      app.add_option("--poset", poset_path, "colored poset JSON file");
  auto* profile_opt = app.add_option(
      "--profile", profile_text, "single diagonal profile tau, e.g. 2,1");
  app.add_option("--deg", job.degree, "series truncation degree")
      ->capture_default_str();
  app.add_option("--trials", job.trials, "number of sampled (q,t) points")
      ->capture_default_str();
  app.add_option("--seed", job.seed, "sampler seed")->capture_default_str();
  auto* qt_opt = app.add_option(
      "--qt", qt_text, "fixed evaluation point p/q,r/s (forces one trial)");
  app.add_option("--json", json_path, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    job.target = qthook::target_from_name(target_text);
    if (shape_opt->count()) job.shape = qthook::Partition::parse(shape_text);
    if (shifted_opt->count())
      job.shifted = qthook::StrictPartition::parse(shifted_text);
    job.two_color = two_color;
    if (tree_opt->count()) job.tree = tree_text;
    if (dk1_opt->count()) job.dk1 = dk1_k;
    if (poset_opt->count()) job.poset_file = poset_path;
    if (profile_opt->count())
      job.profile = qthook::Partition::parse(profile_text);
    if (qt_opt->count()) job.qt = parse_qt(qt_text);

    const qthook::Report report = qthook::run(job);
    std::cout << report.summary();
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return 2;
      }
      out << report.to_json();
    }
    return report.pass ? 0 : 1;
  } catch (const qthook::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
