#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npls.h"

#if defined(_WIN32)
#define NPLS_ISATTY(fd) 0
#else
#include <unistd.h>
#define NPLS_ISATTY(fd) isatty(fd)
#endif

namespace {

bool color_enabled() {
  if (std::getenv("NPLS_NO_COLOR") != nullptr) return false;
  return NPLS_ISATTY(2) != 0;
}

void print_error(const std::string& command, const char* message) {
  if (color_enabled()) {
    std::cerr << "\x1b[31mnpls " << command << ": " << message << "\x1b[0m\n";
  } else {
    std::cerr << "npls " << command << ": " << message << "\n";
  }
}

int exit_code_for(npls_status status) {
  switch (status) {
    case NPLS_OK: return 0;
    case NPLS_ERR_INVALID_DATA: return 2;
    case NPLS_ERR_PARSE: return 2;
    case NPLS_ERR_PICK_NOT_POSITIVE: return 3;
    case NPLS_ERR_UNPAIRED_NODE: return 4;
    default: return 1;
  }
}

struct GridSpec {
  double re0 = -5.0, re1 = 5.0;
  double im0 = 0.1, im1 = 5.0;
  std::size_t steps = 10;
};

bool parse_grid(const std::string& text, GridSpec& grid) {
  std::stringstream stream(text);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (fields.size() != 5) return false;
  try {
    std::size_t used = 0;
    grid.re0 = std::stod(fields[0], &used);
    grid.re1 = std::stod(fields[1], &used);
    grid.im0 = std::stod(fields[2], &used);
    grid.im1 = std::stod(fields[3], &used);
    const long long steps = std::stoll(fields[4], &used);
    if (steps < 1) return false;
    grid.steps = static_cast<std::size_t>(steps);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

struct CommandConfig {
  std::string input_path;
  std::string output_path;
  std::string form = "pick";
  std::string func = "W";
  std::string grid_text;
  double tol_pos = 1e-10;
  double tol_node = 1e-9;
  bool bode = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t sample_m = 4;
};

// Reads the whole input (file or '-' for stdin).
bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream stream(path, std::ios::binary);
  if (!stream) return false;
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  out = buffer.str();
  return true;
}

int write_output(const std::string& command, const CommandConfig& cfg,
                 const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream stream(cfg.output_path, std::ios::binary);
  if (!stream) {
    print_error(command, ("cannot open output file " + cfg.output_path).c_str());
    return 1;
  }
  stream << text;
  return 0;
}

// Builds the data handle from --seed or the input file. Returns nullptr and
// sets exit_code on failure.
npls_data* load_data(const std::string& command, const CommandConfig& cfg,
                     int& exit_code) {
  npls_data* data = nullptr;
  npls_status status = NPLS_OK;
  if (cfg.seed_given) {
    status = npls_data_sample(cfg.seed, cfg.sample_m, &data);
  } else if (cfg.input_path.empty()) {
    print_error(command, "an input file (or --seed) is required");
    exit_code = 2;
    return nullptr;
  } else {
    std::string text;
    if (!read_input(cfg.input_path, text)) {
      print_error(command, ("cannot read input file " + cfg.input_path).c_str());
      exit_code = 1;
      return nullptr;
    }
    status = npls_data_parse_json(text.c_str(), &data);
  }
  if (status != NPLS_OK) {
    print_error(command, npls_last_error());
    exit_code = exit_code_for(status);
    return nullptr;
  }
  return data;
}

std::optional<npls_form> form_from(const std::string& name) {
  if (name == "pick") return NPLS_FORM_PICK;
  if (name == "model") return NPLS_FORM_MODEL;
  if (name == "coupling") return NPLS_FORM_COUPLING;
  return std::nullopt;
}

int run_analyze(const CommandConfig& cfg) {
  int exit_code = 0;
  npls_data* data = load_data("analyze", cfg, exit_code);
  if (!data) return exit_code;
  char* report = nullptr;
  const npls_status status =
      npls_analyze_json(data, cfg.tol_pos, cfg.tol_node, &report);
  npls_data_free(data);
  if (status != NPLS_OK) {
    print_error("analyze", npls_last_error());
    return exit_code_for(status);
  }
  const int rc = write_output("analyze", cfg, std::string(report) + "\n");
  npls_string_free(report);
  return rc;
}

int run_realize(const CommandConfig& cfg) {
  int exit_code = 0;
  const std::optional<npls_form> form = form_from(cfg.form);
  if (!form) {
    print_error("realize", "--form must be pick, model, or coupling");
    return 2;
  }
  npls_data* data = load_data("realize", cfg, exit_code);
  if (!data) return exit_code;
  char* text = nullptr;
  const npls_status status = npls_realize_json(data, *form, &text);
  npls_data_free(data);
  if (status != NPLS_OK) {
    print_error("realize", npls_last_error());
    return exit_code_for(status);
  }
  const int rc = write_output("realize", cfg, std::string(text) + "\n");
  npls_string_free(text);
  return rc;
}

int run_eval(const CommandConfig& cfg) {
  int exit_code = 0;
  const std::optional<npls_form> form = form_from(cfg.form);
  if (!form) {
    print_error("eval", "--form must be pick, model, or coupling");
    return 2;
  }
  if (cfg.func != "W" && cfg.func != "V") {
    print_error("eval", "--func must be W or V");
    return 2;
  }
  GridSpec grid;
  if (!cfg.grid_text.empty() && !parse_grid(cfg.grid_text, grid)) {
    print_error("eval", "--grid expects re0,re1,im0,im1,N");
    return 2;
  }
  npls_data* data = load_data("eval", cfg, exit_code);
  if (!data) return exit_code;
  npls_system* sys = nullptr;
  npls_status status = npls_system_build(data, *form, &sys);
  npls_data_free(data);
  if (status != NPLS_OK) {
    print_error("eval", npls_last_error());
    return exit_code_for(status);
  }
  char* csv = nullptr;
  status = npls_eval_csv(sys, cfg.func[0], grid.re0, grid.re1, grid.im0,
                         grid.im1, grid.steps, &csv);
  npls_system_free(sys);
  if (status != NPLS_OK) {
    print_error("eval", npls_last_error());
    return exit_code_for(status);
  }
  const int rc = write_output("eval", cfg, csv);
  npls_string_free(csv);
  return rc;
}

int run_verify(const CommandConfig& cfg) {
  int exit_code = 0;
  npls_data* data = load_data("verify", cfg, exit_code);
  if (!data) return exit_code;
  char* report = nullptr;
  int all_passed = 0;
  const npls_status status = npls_verify_json(data, &report, &all_passed);
  npls_data_free(data);
  if (status != NPLS_OK) {
    print_error("verify", npls_last_error());
    return exit_code_for(status);
  }
  const int rc = write_output("verify", cfg, std::string(report) + "\n");
  npls_string_free(report);
  if (rc != 0) return rc;
  if (color_enabled()) {
    std::cerr << (all_passed ? "\x1b[32mverify: all checks passed\x1b[0m\n"
                             : "\x1b[31mverify: checks failed\x1b[0m\n");
  }
  return all_passed ? 0 : 1;
}

int run_regimes(const CommandConfig& cfg) {
  int exit_code = 0;
  npls_data* data = load_data("regimes", cfg, exit_code);
  if (!data) return exit_code;
  char* report = nullptr;
  const npls_status status = npls_regimes_json(data, cfg.tol_node, &report);
  npls_data_free(data);
  if (status != NPLS_OK) {
    print_error("regimes", npls_last_error());
    return exit_code_for(status);
  }
  const int rc = write_output("regimes", cfg, std::string(report) + "\n");
  npls_string_free(report);
  return rc;
}

int run_synth(const CommandConfig& cfg) {
  int exit_code = 0;
  npls_data* data = load_data("synth", cfg, exit_code);
  if (!data) return exit_code;
  char* text = nullptr;
  const npls_status status = cfg.bode ? npls_synth_bode_csv(data, &text)
                                      : npls_synth_netlist(data, &text);
  npls_data_free(data);
  if (status != NPLS_OK) {
    print_error("synth", npls_last_error());
    return exit_code_for(status);
  }
  const int rc = write_output("synth", cfg, text);
  npls_string_free(text);
  return rc;
}

void add_common(CLI::App* cmd, CommandConfig& cfg, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", cfg.input_path,
                    "input data JSON file ('-' for stdin)");
  cmd->add_option("--out", cfg.output_path, "write output to PATH");
  cmd->add_option("--seed", cfg.seed, "generate input data from this seed")
      ->each([&cfg](const std::string&) { cfg.seed_given = true; });
  cmd->add_option("--m", cfg.sample_m, "size of generated data (with --seed)")
      ->check(CLI::Range(static_cast<std::size_t>(1), static_cast<std::size_t>(64)));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nevanlinna-Pick interpolation and dissipative-realization toolkit"};
  app.require_subcommand(1);

  CommandConfig cfg;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "positivity, entropy, dissipation, regime, kappa report");
  add_common(analyze, cfg);
  analyze->add_option("--tol-pos", cfg.tol_pos, "relative positivity threshold");
  analyze->add_option("--tol-node", cfg.tol_node, "node coincidence tolerance");

  CLI::App* realize = app.add_subcommand(
      "realize", "export a state-space realization as JSON");
  add_common(realize, cfg);
  realize->add_option("--form", cfg.form, "pick | model | coupling");

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate W or V over a grid, CSV output");
  add_common(eval, cfg);
  eval->add_option("--form", cfg.form, "pick | model | coupling");
  eval->add_option("--func", cfg.func, "W | V");
  eval->add_option("--grid", cfg.grid_text, "re0,re1,im0,im1,N");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check realizations, duality, invariants, interpolation");
  add_common(verify, cfg);

  CLI::App* regimes = app.add_subcommand(
      "regimes", "classify the node configuration");
  add_common(regimes, cfg);
  regimes->add_option("--tol-node", cfg.tol_node, "node coincidence tolerance");

  CLI::App* synth = app.add_subcommand(
      "synth", "LC one-port synthesis for symmetric node sets");
  add_common(synth, cfg);
  synth->add_flag("--bode", cfg.bode, "emit a frequency-response CSV instead");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return run_analyze(cfg);
  if (realize->parsed()) return run_realize(cfg);
  if (eval->parsed()) return run_eval(cfg);
  if (verify->parsed()) return run_verify(cfg);
  if (regimes->parsed()) return run_regimes(cfg);
  if (synth->parsed()) return run_synth(cfg);
  return 0;
}
