#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotmosaic/render.hpp"
#include "knotmosaic/verify.hpp"

using namespace knotmosaic;

namespace {

enum Exit {
  kOk = 0,
  kClaimFailed = 1,  // verify claim does not hold, or validate found a violation
  kUsage = 2,
  kMissingFile = 3,
  kBadMosaic = 4,
  kBadTable = 5,
  kFailure = 6,
};

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kMissingFile, "cannot read " + path};
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Mosaic read_mosaic(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_mosaic(text);
  } catch (const std::exception& e) {
    throw Failure{kBadMosaic, path + ": " + e.what()};
  }
}

std::string default_table() {
  if (const char* env = std::getenv("KNOTMOSAIC_TABLE")) return env;
  return KNOTMOSAIC_DATA_DIR "/knots.csv";
}

KnotTable read_table(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Failure{kMissingFile, "cannot read " + path};
  try {
    return load_table_file(path);
  } catch (const std::exception& e) {
    throw Failure{kBadTable, e.what()};
  }
}

std::set<std::string> read_names(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Failure{kMissingFile, "cannot read " + path};
  const auto names = load_name_list_file(path);
  return {names.begin(), names.end()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{kMissingFile, "cannot write " + path};
  out << text;
}

void require_knot(const Mosaic& m) {
  if (!m.is_deterministic()) throw Failure{kBadMosaic, "mosaic holds undetermined cells"};
  if (auto v = check_connections(m))
    throw Failure{kBadMosaic, "not suitably connected at (" + std::to_string(v->pos.row) + "," +
                                  std::to_string(v->pos.col) + ")"};
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Top: return "top";
    case Side::Right: return "right";
    case Side::Bottom: return "bottom";
    case Side::Left: return "left";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot mosaics: validate, render, reduce, identify, enumerate, verify"};
  app.require_subcommand(1);

  std::string file, format = "ascii", out_path, table_path = default_table();
  std::string exclude_path = KNOTMOSAIC_DATA_DIR "/exclusion.txt";
  std::string targets_path = KNOTMOSAIC_DATA_DIR "/targets.txt";
  std::string claim, from;
  int budget = 1000, min_crossings = 9, jobs = 1;
  bool show_steps = false;
  std::vector<int> layouts{1, 2, 3};

  auto* validate = app.add_subcommand("validate", "Check suitable connectedness");
  validate->add_option("file", file, "Mosaic file")->required();

  auto* render = app.add_subcommand("render", "Draw a mosaic");
  render->add_option("file", file, "Mosaic file")->required();
  render->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out_path, "Output path (default standard output)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply reducing moves");
  reduce_cmd->add_option("file", file, "Mosaic file")->required();
  reduce_cmd->add_option("--budget", budget, "Maximum number of moves")->check(CLI::NonNegativeNumber);
  reduce_cmd->add_flag("--steps", show_steps, "List the moves on standard error");

  auto* identify = app.add_subcommand("identify", "Name the knot of a mosaic");
  identify->add_option("file", file, "Mosaic file")->required();
  identify->add_option("--table", table_path, "Knot table (default $KNOTMOSAIC_TABLE)");

  auto* enumerate = app.add_subcommand("enumerate", "Survey layouts and write JSONL");
  enumerate->add_option("--layouts", layouts, "Layout ids")->delimiter(',');
  enumerate->add_option("--min-crossings", min_crossings, "Minimum crossing tiles");
  enumerate->add_option("--table", table_path, "Knot table");
  enumerate->add_option("--exclude", exclude_path, "Exclusion list");
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out_path, "JSONL output (default standard output)");

  auto* verify = app.add_subcommand("verify", "Check a claim");
  verify->add_option("--claim", claim, "layouts, bounds or survey")
      ->required()
      ->check(CLI::IsMember({"layouts", "bounds", "survey"}));
  verify->add_option("--table", table_path, "Knot table");
  verify->add_option("--exclude", exclude_path, "Exclusion list");
  verify->add_option("--targets", targets_path, "Expected survey names");
  verify->add_option("--layouts", layouts, "Layout ids for the survey")->delimiter(',');
  verify->add_option("--min-crossings", min_crossings, "Minimum crossing tiles");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--from", from, "Check a JSONL file from enumerate instead of surveying");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      const Mosaic m = read_mosaic(file);
      if (auto v = check_connections(m)) {
        std::cout << "not suitably connected: cell (" << v->pos.row << "," << v->pos.col << ") " << side_name(v->side)
                  << '\n';
        return kClaimFailed;
      }
      std::cout << "suitably connected: " << m.size() << "-mosaic, " << m.non_blank_count() << " tiles, "
                << m.crossing_count() << " crossings";
      if (m.is_deterministic()) std::cout << ", " << trace(m).size() << " component(s)";
      std::cout << '\n';
      return kOk;
    }
    if (*render) {
      const Mosaic m = read_mosaic(file);
      write_output(out_path, format == "svg" ? render_svg(m) : render_ascii(m));
      return kOk;
    }
    if (*reduce_cmd) {
      const Mosaic m = read_mosaic(file);
      require_knot(m);
      const Reduction r = reduce(m, budget);
      if (show_steps)
        for (const auto& s : r.steps) std::cerr << s.rule << " at (" << s.anchor.row << "," << s.anchor.col << ")\n";
      std::cerr << m.non_blank_count() << " -> " << r.result.non_blank_count() << " tiles"
                << (r.exhausted ? " (budget exhausted)" : "") << '\n';
      std::cout << serialize(r.result);
      return kOk;
    }
    if (*identify) {
      const Mosaic m = read_mosaic(file);
      require_knot(m);
      const KnotTable table = read_table(table_path);
      if (trace(m).size() != 1) throw Failure{kBadMosaic, "mosaic is a link"};
      const DiagramCode code = to_diagram_code(m);
      const Fingerprint fp = fingerprint(code);
      const auto names = table.identify(fp, code);
      nlohmann::ordered_json j;
      j["knot"] = names;
      j["tiles"] = m.non_blank_count();
      j["crossings"] = m.crossing_count();
      j["jones"] = fp.jones.to_string();
      j["alexander"] = fp.alexander.to_string();
      j["determinant"] = fp.determinant;
      std::cout << j.dump() << '\n';
      return names.empty() ? kClaimFailed : kOk;
    }
    if (*enumerate) {
      const KnotTable table = read_table(table_path);
      SurveyOptions options{layouts, min_crossings, jobs, read_names(exclude_path)};
      const Survey survey = run_survey(options, table);
      for (const auto& [id, s] : survey.stats)
        std::cerr << "layout " << id << ": " << s.fills << " fills, " << s.links << " links, " << s.composites
                  << " composites, " << s.reducibles << " reducible, " << s.shadows << " shadows kept, " << s.diagrams
                  << " diagrams\n";
      write_output(out_path, to_jsonl(survey));
      return kOk;
    }
    if (*verify) {
      ClaimReport report;
      if (claim == "bounds") {
        report = verify_bounds();
      } else if (claim == "layouts") {
        report = verify_layouts();
      } else {
        const auto expected = read_names(targets_path);
        Survey survey;
        if (!from.empty()) {
          survey = parse_jsonl(read_file(from));
        } else {
          const KnotTable table = read_table(table_path);
          survey = run_survey({layouts, min_crossings, jobs, read_names(exclude_path)}, table);
        }
        report = verify_survey(survey, expected);
      }
      std::cout << report.report << (report.pass ? "pass" : "fail") << ": " << claim << '\n';
      return report.pass ? kOk : kClaimFailed;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
