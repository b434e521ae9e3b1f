#include "cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tightspan/io.hpp"
#include "tightspan/svg.hpp"

namespace tightspan::cli {

namespace {

namespace fs = std::filesystem;

enum class Command { kCompute, kVerify, kRender, kTrace };

struct CliConfig {
  Command command = Command::kCompute;
  std::string input;
  std::string output;
  std::string document;
  std::string format;  // "", "json" or "csv"
  Rational grid_step{1, 20};
  std::size_t seed_count = 200;
  std::optional<Rational> tolerance;  // defaults to grid_step
  std::vector<std::string> stages;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes via a temporary sibling and renames, so a failed run leaves no
// partial file behind.
void write_file_atomic(const fs::path& path, const std::string& bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot write '" + tmp.string() + "'");
    out << bytes;
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw CliError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CliError("cannot rename onto '" + path.string() + "'");
  }
}

void emit(const CliConfig& cfg, const std::string& bytes, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << bytes;
  } else {
    write_file_atomic(cfg.output, bytes);
  }
}

bool looks_like_document(const std::string& bytes) {
  // Computed documents nest their points under "input".
  const auto pos = bytes.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && bytes[pos] == '{' && bytes.find("\"input\"") != std::string::npos;
}

InputFormat input_format(const CliConfig& cfg) {
  if (cfg.format == "json") return InputFormat::kJson;
  if (cfg.format == "csv") return InputFormat::kCsv;
  return format_for_path(cfg.input);
}

struct LoadedInput {
  InputDocument input;
  std::optional<OutputDocument> document;  // when the input file is a computed document
};

LoadedInput load_input(const CliConfig& cfg, std::ostream& err) {
  const std::string bytes = read_file(cfg.input);
  const InputFormat format = input_format(cfg);
  LoadedInput loaded{read_points(bytes, format), std::nullopt};
  if (format == InputFormat::kJson && looks_like_document(bytes)) loaded.document = parse_output(bytes);
  if (const auto dups = loaded.input.points.duplicates_removed(); dups > 0) {
    err << "warning: removed " << dups << " duplicate point" << (dups == 1 ? "" : "s") << "\n";
  }
  return loaded;
}

OutputDocument compute(const InputDocument& input) {
  return make_document(input, compute_tight_span(input.points));
}

void print_report(const VerificationReport& r, std::ostream& err) {
  err << "extremality:  " << r.extremality_failure_count << " failures over " << r.sample_count
      << " samples\n";
  err << "isometry:     " << r.isometry_failure_count << " failures over " << r.pair_count << " pairs\n";
  if (r.params.seed_count == 0) {
    err << "surjectivity: skipped (0 seeds)\n";
  } else {
    err << "surjectivity: " << r.surjectivity_failure_count << " failures over " << r.seeds_checked
        << " seeds (tolerance " << format_rational(r.params.surjectivity_tolerance) << ")\n";
  }
  for (const auto& w : r.extremality_failures) {
    err << "  N1 witness: sample " << format_point(w.sample) << " has no partner for "
        << format_point(w.unmatched) << "\n";
  }
  for (const auto& w : r.isometry_failures) {
    err << "  N2 witness: " << format_point(w.x) << " " << format_point(w.y) << " dinf="
        << format_rational(w.dinf) << " d1=" << format_rational(w.d1) << "\n";
  }
  for (const auto& w : r.surjectivity_failures) {
    err << "  N3 witness: seed " << format_point(w.seed) << " nearest sample at "
        << format_rational(w.distance) << "\n";
  }
  err << (r.passed() ? "PASS" : "FAIL") << "\n";
}

int cmd_compute(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const LoadedInput loaded = load_input(cfg, err);
  emit(cfg, write_output(compute(loaded.input)), out);
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const LoadedInput loaded = load_input(cfg, err);
  OutputDocument doc;
  if (!cfg.document.empty()) {
    doc = parse_output(read_file(cfg.document));
    if (doc.input.empty() || !PointSet(doc.input).same_set(loaded.input.points)) {
      throw CliError("document '" + cfg.document + "' was computed for a different point set");
    }
  } else if (loaded.document && loaded.document->tightspan) {
    doc = *loaded.document;
  } else {
    doc = compute(loaded.input);
  }
  if (!doc.tightspan) throw CliError("document has no tightspan section to verify");

  VerificationParams params;
  params.grid_step = cfg.grid_step;
  params.seed_count = cfg.seed_count;
  params.surjectivity_tolerance = cfg.tolerance.value_or(cfg.grid_step);
  doc.verification = verify_tight_span(*doc.tightspan, loaded.input.points, params);
  print_report(*doc.verification, err);
  emit(cfg, write_output(doc), out);
  return doc.verification->passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_render(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const LoadedInput loaded = load_input(cfg, err);
  const OutputDocument doc = loaded.document ? *loaded.document : compute(loaded.input);

  std::vector<Stage> stages;
  if (cfg.stages.empty() || std::find(cfg.stages.begin(), cfg.stages.end(), "all") != cfg.stages.end()) {
    stages.assign(kAllStages.begin(), kAllStages.end());
  } else {
    for (const auto& name : cfg.stages) stages.push_back(*parse_stage(name));
  }

  const fs::path dir = cfg.output.empty() ? fs::path(".") : fs::path(cfg.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw CliError("cannot create output directory '" + dir.string() + "'");

  // Render everything first so a missing stage writes nothing.
  std::vector<std::pair<fs::path, std::string>> files;
  const std::string stem = fs::path(cfg.input).stem().string();
  for (Stage s : stages) {
    files.emplace_back(dir / (stem + "." + stage_name(s) + ".svg"), render_svg(doc, s));
  }
  for (const auto& [path, bytes] : files) {
    write_file_atomic(path, bytes);
    out << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_trace(const CliConfig& cfg, std::ostream& out, std::ostream& err, const Environment& env) {
  const LoadedInput loaded = load_input(cfg, err);
  const bool color = env.color && std::getenv("TIGHTSPAN_NO_COLOR") == nullptr;
  auto paint = [color](const std::string& text, const char* code) {
    return color ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
  };

  const Spine spine = build_spine(loaded.input.points);
  for (const auto& step : spine.trace) {
    out << paint(step_case_name(step.step_case), "1;34") << " t=" << format_rational(step.t) << " "
        << format_point(step.cursor_before) << " -> " << format_point(step.cursor_after) << "\n";
  }
  const Skeleton skeleton = build_skeleton(loaded.input.points, spine);
  for (const auto& c : skeleton.connectors) {
    if (c.degenerate()) {
      out << paint("on-spine", "2") << " " << format_point(c.point) << "\n";
    } else {
      out << paint("connect", "36") << " " << format_point(c.point) << " -> " << format_point(c.attach) << "\n";
    }
  }
  return kExitOk;
}

Rational positive_rational(const std::string& text, const char* flag) {
  const Rational r = parse_rational(text);
  if (r <= Rational(0)) throw CliError(std::string(flag) + " must be positive");
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Tight spans of finite point sets in the Manhattan plane", "tightspan"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string grid_step_text = "1/20";
  std::string tolerance_text;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input, "Point set (.json or .csv) or a computed document")
        ->required();
    sub->add_option("--format", cfg.format, "Override input format detection")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* compute_cmd = app.add_subcommand("compute", "Compute spine, skeleton and tight span");
  add_input(compute_cmd);
  compute_cmd->add_option("-o,--output", cfg.output, "Output JSON document (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check the tight span against the abstract definition");
  add_input(verify_cmd);
  verify_cmd->add_option("-d,--document", cfg.document, "Previously computed document to verify");
  verify_cmd->add_option("-o,--output", cfg.output, "Output JSON document with report (default: stdout)");
  verify_cmd->add_option("--grid-step", grid_step_text, "Sampling grid step (rational)")
      ->capture_default_str();
  verify_cmd->add_option("--seeds", cfg.seed_count, "Number of surjectivity seeds")->capture_default_str();
  verify_cmd->add_option("--tolerance", tolerance_text, "Surjectivity tolerance (default: grid step)");

  auto* render_cmd = app.add_subcommand("render", "Write one SVG per construction stage");
  add_input(render_cmd);
  render_cmd->add_option("-o,--output", cfg.output, "Output directory (default: .)");
  render_cmd->add_option("-s,--stage", cfg.stages, "Stage(s) to render (default: all)")
      ->check(CLI::IsMember({"points", "spine", "skeleton", "hatching", "tightspan", "all"}));

  auto* trace_cmd = app.add_subcommand("trace", "Print the spine construction step by step");
  add_input(trace_cmd);

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    cfg.grid_step = positive_rational(grid_step_text, "--grid-step");
    if (!tolerance_text.empty()) {
      cfg.tolerance = parse_rational(tolerance_text);
      if (*cfg.tolerance < Rational(0)) throw CliError("--tolerance must be nonnegative");
    }
    if (compute_cmd->parsed()) return cmd_compute(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (render_cmd->parsed()) return cmd_render(cfg, out, err);
    if (trace_cmd->parsed()) return cmd_trace(cfg, out, err, env);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace tightspan::cli
