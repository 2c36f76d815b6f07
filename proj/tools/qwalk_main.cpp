#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qwalk/io.hpp"
#include "qwalk/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Quantum walk simulator for beam-splitter pyramids"};
  app.set_version_flag("--version", std::string("qwalk ") + qwalk::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string basis_override;
  CLI::App* run = app.add_subcommand("run", "Execute a run config and write the distribution");
  run->add_option("--config", config_path, "JSON run config file")->required();
  run->add_option("--out", out_path, "Output path (overrides the config; default stdout)");
  run->add_option("--basis", basis_override, "Output basis (overrides the config)")
      ->check(CLI::IsMember({"ports", "positions"}));

  std::string file_a;
  std::string file_b;
  double threshold = 0.0;
  CLI::App* cmp = app.add_subcommand("compare", "Compare two result files");
  cmp->add_option("fileA", file_a, "First result file")->required();
  cmp->add_option("fileB", file_b, "Second result file")->required();
  cmp->add_option("--threshold", threshold, "Minimum similarity to exit 0 (default 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      qwalk::io::RunConfig cfg = qwalk::io::load_run_config(config_path);
      if (!out_path.empty()) cfg.output = out_path;
      if (!basis_override.empty()) cfg.basis = qwalk::basis_from_name(basis_override);
      const qwalk::io::RunResult result = qwalk::io::execute(cfg);
      const std::string doc = qwalk::io::render(cfg, result);
      if (cfg.output.empty()) {
        std::fwrite(doc.data(), 1, doc.size(), stdout);
      } else {
        qwalk::io::write_text_file(cfg.output, doc);
      }
      return 0;
    }

    const qwalk::io::CompareResult res = qwalk::io::compare_files(file_a, file_b, threshold);
    std::printf("similarity = %s\n", qwalk::io::format_double(res.similarity).c_str());
    std::printf("max_abs_difference = %s\n",
                qwalk::io::format_double(res.max_abs_difference).c_str());
    std::printf("threshold = %s\n", qwalk::io::format_double(threshold).c_str());
    std::printf("result = %s\n", res.pass ? "PASS" : "FAIL");
    return res.pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
