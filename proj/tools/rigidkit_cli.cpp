// rigidkit command-line front end. Everything goes through the C API.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rigidkit/rigidkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct FrameworkDeleter {
  void operator()(rk_framework* f) const { rk_framework_free(f); }
};
using FrameworkPtr = std::unique_ptr<rk_framework, FrameworkDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown for failures that end the command with a given exit code.
struct Exit {
  int code;
};

int report_error(rk_status status, const std::string& context) {
  std::cerr << "rigidkit: " << context << ": " << rk_status_name(status) << ": " << rk_last_error() << "\n";
  return status == RK_ERROR_PARSE || status == RK_ERROR_INVALID_ARGUMENT || status == RK_ERROR_OUT_OF_RANGE
             ? kExitUsage
             : kExitFailed;
}

void check(rk_status status, const std::string& context) {
  if (status != RK_OK) throw Exit{report_error(status, context)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "rigidkit: cannot read " << path << "\n";
    throw Exit{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    std::cerr << "rigidkit: cannot write " << path << "\n";
    throw Exit{kExitFailed};
  }
}

FrameworkPtr load(const std::string& path) {
  const std::string text = read_file(path);
  rk_framework* f = nullptr;
  check(rk_framework_parse(text.c_str(), &f), path);
  return FrameworkPtr(f);
}

std::string witness_path_for(const std::string& input) {
  const std::string suffix = ".json";
  std::string stem = input;
  if (stem.size() > suffix.size() && stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  return stem + ".witness.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global rigidity analysis for bar-and-joint frameworks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rk_version()));

  // paper-verify
  auto* verify = app.add_subcommand("paper-verify", "Reproduce the affine counterexample in dimension D");
  int verify_dim = 0;
  bool verify_json = false;
  int max_dim = rk_max_dim();
  verify->add_option("--dim", verify_dim, "Ambient dimension D >= 2")->required();
  verify->add_flag("--json", verify_json, "Emit a JSON report");
  verify->add_option("--max-dim", max_dim, "Override the dimension cap (default from RIGIDKIT_MAX_DIM or 12)");

  // generate
  auto* generate = app.add_subcommand("generate", "Write a configuration of the family as a framework document");
  int gen_dim = 0;
  std::string gen_label;
  bool gen_affine = false;
  std::string gen_out = "-";
  generate->add_option("--dim", gen_dim, "Ambient dimension D >= 2")->required();
  generate->add_option("--config", gen_label, "One of p, q, r, s, t")->required();
  generate->add_flag("--affine", gen_affine, "Apply the axis-2 contraction first (p and q only)");
  generate->add_option("-o,--output", gen_out, "Output file, - for stdout");
  generate->add_option("--max-dim", max_dim, "Override the dimension cap");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Run rigidity checks on a framework document");
  std::string an_file;
  std::string an_versus;
  std::vector<std::uint32_t> an_base;
  std::string an_checks;
  bool an_json = false;
  int an_trials = 32;
  std::uint64_t an_seed = 20190309;
  std::string an_witness;
  analyze->add_option("file", an_file, "Framework document (JSON)")->required();
  analyze->add_option("--versus", an_versus, "Second framework for equivalence-vs / congruence-vs");
  analyze->add_option("--base", an_base, "Base vertex ids, comma separated")->delimiter(',');
  analyze->add_option("--checks", an_checks,
                      "Comma separated: equivalence-vs, congruence-vs, infinitesimal, generic-global, enumerate, "
                      "decide")
      ->required();
  analyze->add_flag("--json", an_json, "Emit a JSON report");
  analyze->add_option("--trials", an_trials, "Trials for generic-global");
  analyze->add_option("--seed", an_seed, "Seed for generic-global");
  analyze->add_option("--witness", an_witness, "Where to write a witness (default FILE.witness.json)");

  // render
  auto* render = app.add_subcommand("render", "Draw a planar projection as SVG");
  std::string rd_file;
  std::string rd_out;
  std::vector<int> rd_axes{1, 2};
  render->add_option("file", rd_file, "Framework document (JSON)")->required();
  render->add_option("-o,--output", rd_out, "SVG file, - for stdout")->required();
  render->add_option("--axes", rd_axes, "Two 1-based coordinate axes")->delimiter(',')->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      char* report = nullptr;
      int exit_code = kExitFailed;
      check(rk_paper_verify(verify_dim, max_dim, verify_json ? RK_FORMAT_JSON : RK_FORMAT_TEXT, &report, &exit_code),
            "paper-verify");
      OwnedString owned(report);
      (exit_code == kExitUsage ? std::cerr : std::cout) << owned.get();
      return exit_code;
    }

    if (*generate) {
      if (gen_label.size() != 1) {
        std::cerr << "rigidkit: --config must be one of p, q, r, s, t\n";
        return kExitUsage;
      }
      if (gen_dim < 2 || gen_dim > max_dim) {
        std::cerr << "rigidkit: --dim must be in [2, " << max_dim << "]\n";
        return kExitUsage;
      }
      rk_framework* f = nullptr;
      check(rk_framework_generate(gen_dim, gen_label[0], gen_affine ? 1 : 0, &f), "generate");
      FrameworkPtr fw(f);
      char* json = nullptr;
      check(rk_framework_to_json(fw.get(), &json), "generate");
      OwnedString owned(json);
      write_output(gen_out, owned.get());
      return kExitOk;
    }

    if (*analyze) {
      FrameworkPtr fw = load(an_file);
      FrameworkPtr versus;
      if (!an_versus.empty()) versus = load(an_versus);
      char* report = nullptr;
      rk_framework* witness = nullptr;
      int exit_code = kExitFailed;
      check(rk_analyze(fw.get(), versus.get(), an_base.empty() ? nullptr : an_base.data(), an_base.size(),
                       an_checks.c_str(), an_trials, an_seed, an_json ? RK_FORMAT_JSON : RK_FORMAT_TEXT, &report,
                       &witness, &exit_code),
            "analyze");
      OwnedString owned(report);
      FrameworkPtr witness_fw(witness);
      std::cout << owned.get();
      if (witness_fw) {
        char* json = nullptr;
        check(rk_framework_to_json(witness_fw.get(), &json), "witness");
        OwnedString witness_json(json);
        const std::string path = an_witness.empty() ? witness_path_for(an_file) : an_witness;
        write_output(path, witness_json.get());
        std::cerr << "witness written to " << path << "\n";
      }
      return exit_code;
    }

    if (*render) {
      FrameworkPtr fw = load(rd_file);
      char* svg = nullptr;
      check(rk_render_svg(fw.get(), rd_axes.at(0), rd_axes.at(1), &svg), "render");
      OwnedString owned(svg);
      write_output(rd_out, owned.get());
      return kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
