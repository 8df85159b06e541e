#include "spatialkit/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "spatialkit/agents.hpp"
#include "spatialkit/dataset.hpp"
#include "spatialkit/errors.hpp"
#include "spatialkit/evaluator.hpp"
#include "spatialkit/generate.hpp"
#include "spatialkit/oracles.hpp"
#include "spatialkit/render.hpp"

namespace spatialkit {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path default_out(const std::string& leaf) {
  if (const char* root = std::getenv("SPATIALKIT_OUT"); root != nullptr && *root != '\0') {
    return fs::path(root) / leaf;
  }
  return fs::path("out") / leaf;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseFailure, fmt::format("{}: {}", where, e.what()));
  }
}

Cell cell_arg(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

SppInstance spp_from_instance_json(const json& j) {
  SppInstance in;
  in.instance_id = j.value("instance_id", std::string("input"));
  in.grid_n = j.at("grid_n").get<int>();
  in.start = cell_arg(j.at("start"));
  in.end = cell_arg(j.at("end"));
  if (j.contains("obstacles")) {
    for (const auto& c : j.at("obstacles")) in.obstacles.push_back(cell_arg(c));
  }
  std::sort(in.obstacles.begin(), in.obstacles.end());
  return in;
}

TspInstance tsp_from_instance_json(const json& j) {
  TspInstance in;
  in.instance_id = j.value("instance_id", std::string("input"));
  for (const auto& o : j.at("objects")) {
    in.objects.push_back(
        {o.at("label").get<std::string>(), Point{o.at("x").get<int>(), o.at("y").get<int>()}});
  }
  in.start_label = j.at("start_label").get<std::string>();
  return in;
}

json solution_json(const std::string& id, const SppSolution& s) {
  json path = json::array();
  for (Cell c : s.path) path.push_back({c.col, c.row});
  return {{"instance_id", id},
          {"optimal_length", s.optimal_length},
          {"optimal_path_count", s.optimal_path_count},
          {"path", path},
          {"answer", format_path(s.path)}};
}

json solution_json(const std::string& id, const TspSolution& s) {
  return {{"instance_id", id},
          {"order", s.order},
          {"tour_length", s.tour_length},
          {"answer", format_order(s.order)}};
}

// Accepts a manifest (records carry "type") or a single bare instance.
void solve_file(const std::string& task, const fs::path& in_path, std::ostream& out) {
  const auto lines = split_lines(read_file(in_path));
  if (lines.empty()) throw Error(ErrorCode::ParseFailure, in_path.string() + ": empty input");
  const bool manifest = parse_json(lines.front(), in_path.string()).contains("type");
  if (!manifest) {
    const json j = parse_json(read_file(in_path), in_path.string());
    try {
      if (task == "spp") {
        const auto in = spp_from_instance_json(j);
        validate(in);
        out << solution_json(in.instance_id, solve_spp(in)).dump() << '\n';
      } else {
        const auto in = tsp_from_instance_json(j);
        validate(in);
        out << solution_json(in.instance_id, solve_tsp(in)).dump() << '\n';
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseFailure, fmt::format("{}: {}", in_path.string(), e.what()));
    }
    return;
  }
  std::size_t solved = 0;
  for (const auto& record : read_manifest(in_path)) {
    if (task == "spp") {
      if (const auto* r = std::get_if<SppRecord>(&record)) {
        out << solution_json(r->instance.instance_id, solve_spp(r->instance)).dump() << '\n';
        ++solved;
      }
    } else if (const auto* r = std::get_if<TspRecord>(&record)) {
      out << solution_json(r->instance.instance_id, solve_tsp(r->instance)).dump() << '\n';
      ++solved;
    }
  }
  if (solved == 0) {
    throw Error(ErrorCode::TaskMismatch,
                fmt::format("{} holds no {} records", in_path.string(), task));
  }
}

std::vector<EvalItem> eval_items(const fs::path& manifest) {
  std::vector<EvalItem> items;
  for (const auto& record : read_manifest(manifest)) {
    if (auto item = as_eval_item(record)) items.push_back(std::move(*item));
  }
  if (items.empty()) {
    throw Error(ErrorCode::EmptyRun, manifest.string() + " holds no evaluation items");
  }
  return items;
}

std::map<std::string, std::string> read_responses(const fs::path& path) {
  std::map<std::string, std::string> responses;
  for (const auto& line : split_lines(read_file(path))) {
    const json j = parse_json(line, path.string());
    if (!j.contains("item_id") || !j.contains("response")) {
      throw Error(ErrorCode::ParseFailure,
                  path.string() + ": response lines need item_id and response");
    }
    responses[j.at("item_id").get<std::string>()] = j.at("response").get<std::string>();
  }
  return responses;
}

struct ParsedSceneId {
  std::string prefix;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

ParsedSceneId parse_scene_id(const std::string& id) {
  const auto last = id.rfind('-');
  const auto mid = last == std::string::npos ? last : id.rfind('-', last - 1);
  ParsedSceneId p;
  auto number = [&](std::size_t from, std::size_t to, std::uint64_t& value) {
    const auto r = std::from_chars(id.data() + from, id.data() + to, value);
    return r.ec == std::errc() && r.ptr == id.data() + to && from < to;
  };
  if (mid == std::string::npos || mid == 0 || !number(mid + 1, last, p.seed) ||
      !number(last + 1, id.size(), p.index)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("scene id '{}' is not of the form PREFIX-SEED-INDEX", id));
  }
  p.prefix = id.substr(0, mid);
  return p;
}

ImageDocument regenerate(const std::string& id) {
  const auto p = parse_scene_id(id);
  auto size_after = [&](std::string_view stem) -> std::optional<int> {
    if (!p.prefix.starts_with(stem)) return std::nullopt;
    int n = 0;
    const char* first = p.prefix.data() + stem.size();
    const char* last = p.prefix.data() + p.prefix.size();
    const auto r = std::from_chars(first, last, n);
    if (r.ec != std::errc() || r.ptr != last || first == last) return std::nullopt;
    return n;
  };
  if (const auto n = size_after("spp")) return render_spp(gen_spp(p.seed, p.index, *n));
  if (const auto n = size_after("tsp")) return render_tsp(gen_tsp(p.seed, p.index, *n));
  GenConfig cfg;
  cfg.id_prefix = p.prefix;
  const Scene scene = sample_scene(p.seed, p.index, cfg);
  if (scene.scene_id != id) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("cannot regenerate '{}'", id));
  }
  return render_scene(scene);
}

void write_report(const RunReport& report, const fs::path& path, std::ostream& out) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_file_atomic(path, to_json(report).dump(2) + "\n");
  auto txt = path;
  txt.replace_extension(".txt");
  const auto table = to_table(report);
  write_file_atomic(txt, table);
  out << table;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatial-reasoning dataset generator, solver and scorer", "spatialkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out_dir;

  auto* train = app.add_subcommand("gen-train", "generate the instruction-tuning set");
  std::size_t scenes = 100;
  bool no_images = false;
  train->add_option("--scenes", scenes, "number of scenes")->check(CLI::PositiveNumber);
  train->add_option("--seed", seed, "master seed");
  train->add_option("--out", out_dir, "output directory");
  train->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  train->add_flag("--no-images", no_images, "write the manifest only");

  auto* gen_eval = app.add_subcommand("gen-eval", "generate an evaluation set");
  std::string eval_task = "basic";
  std::size_t count = 100;
  int grid_n = 4;
  int objects = 4;
  gen_eval->add_option("--task", eval_task, "basic | spp | tsp")
      ->check(CLI::IsMember({"basic", "spp", "tsp"}));
  gen_eval->add_option("--count", count, "number of items")->check(CLI::PositiveNumber);
  gen_eval->add_option("--grid-n", grid_n, "SPP grid size")->check(CLI::IsMember({4, 5}));
  gen_eval->add_option("--objects", objects, "TSP object count")->check(CLI::IsMember({4, 5}));
  gen_eval->add_option("--seed", seed, "master seed");
  gen_eval->add_option("--out", out_dir, "output directory");
  gen_eval->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  gen_eval->add_flag("--no-images", no_images, "write the manifest only");

  auto* solve = app.add_subcommand("solve", "solve SPP or TSP instances exactly");
  std::string solve_task;
  std::string in_path;
  solve->add_option("--task", solve_task, "spp | tsp")
      ->required()
      ->check(CLI::IsMember({"spp", "tsp"}));
  solve->add_option("--in", in_path, "manifest or instance JSON")->required();

  auto* agent = app.add_subcommand("run-agent", "answer a manifest with a reference agent");
  std::string agent_kind = "oracle";
  std::string manifest;
  int style = -1;
  agent->add_option("--agent", agent_kind, "oracle | random | adversarial")
      ->check(CLI::IsMember({"oracle", "random", "adversarial"}));
  agent->add_option("--manifest", manifest, "evaluation manifest")->required();
  agent->add_option("--out", out_dir, "responses file (JSONL)")->required();
  agent->add_option("--seed", seed, "agent seed");
  agent->add_option("--style", style, "phrasing style 0-2, -1 for mixed")
      ->check(CLI::Range(-1, kPhrasingStyles - 1));

  auto* score = app.add_subcommand("score", "score responses against a manifest");
  std::string responses_path;
  std::string mode = "strict";
  std::string report_path;
  score->add_option("--manifest", manifest, "evaluation manifest")->required();
  score->add_option("--responses", responses_path, "responses file (JSONL)")->required();
  score->add_option("--mode", mode, "TSP scoring: strict | length-optimal")
      ->check(CLI::IsMember({"strict", "length-optimal"}));
  score->add_option("--report", report_path, "report path (JSON; a .txt sibling is written)");

  auto* stats_cmd = app.add_subcommand("stats", "label frequency tables of a manifest");
  stats_cmd->add_option("--manifest", manifest, "manifest")->required();
  bool stats_json = false;
  stats_cmd->add_flag("--json", stats_json, "print JSON instead of text");

  auto* render_cmd = app.add_subcommand("render", "regenerate and render one scene by id");
  std::string render_id;
  render_cmd->add_option("--scene-id", render_id, "e.g. scene-7-000003, spp4-1-000010")
      ->required();
  render_cmd->add_option("--out", out_dir, "output directory");

  auto* verify = app.add_subcommand("verify", "cross-check solvers against brute-force oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: code=Usage message=" << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    if (train->parsed()) {
      const fs::path dir = out_dir.empty() ? default_out("train") : fs::path(out_dir);
      const auto records = generate_training(seed, scenes, {}, jobs);
      write_dataset(records, dir, {.images = !no_images, .jobs = jobs});
      out << fmt::format("wrote {} records to {}\n", records.size(), dir.string());
    } else if (gen_eval->parsed()) {
      const fs::path dir = out_dir.empty() ? default_out(eval_task) : fs::path(out_dir);
      std::vector<ManifestRecord> records;
      if (eval_task == "basic") {
        records = generate_basic_eval(seed, count, kMcqCapabilities, jobs);
      } else if (eval_task == "spp") {
        records = generate_spp_eval(seed, count, grid_n, {}, jobs);
      } else {
        records = generate_tsp_eval(seed, count, objects, jobs);
      }
      write_dataset(records, dir, {.images = !no_images, .jobs = jobs});
      out << fmt::format("wrote {} records to {}\n", records.size(), dir.string());
    } else if (solve->parsed()) {
      solve_file(solve_task, in_path, out);
    } else if (agent->parsed()) {
      const AgentSpec spec{*parse_agent_kind(agent_kind), seed, style};
      std::string lines;
      for (const auto& item : eval_items(manifest)) {
        lines += json{{"item_id", item_id_of(item)}, {"response", respond(spec, item)}}.dump();
        lines += '\n';
      }
      const fs::path path(out_dir);
      if (path.has_parent_path()) fs::create_directories(path.parent_path());
      write_file_atomic(path, lines);
      out << fmt::format("wrote responses to {}\n", path.string());
    } else if (score->parsed()) {
      const auto scoring = *parse_scoring(mode);
      const auto responses = read_responses(responses_path);
      std::vector<EvalRecord> scored;
      for (const auto& item : eval_items(manifest)) {
        const auto it = responses.find(item_id_of(item));
        scored.push_back(
            score_response(item, it == responses.end() ? std::string() : it->second, scoring));
      }
      const auto report = aggregate(scored, scoring);
      write_report(report,
                   report_path.empty() ? default_out("report.json") : fs::path(report_path),
                   out);
    } else if (stats_cmd->parsed()) {
      const auto report = stats(read_manifest(manifest));
      out << (stats_json ? to_json(report).dump(2) + "\n" : to_text(report));
    } else if (render_cmd->parsed()) {
      const fs::path dir = out_dir.empty() ? default_out("render") : fs::path(out_dir);
      const auto doc = regenerate(render_id);
      fs::create_directories(dir);
      write_file_atomic(dir / (render_id + ".png"),
                        std::string_view(reinterpret_cast<const char*>(doc.png.data()),
                                         doc.png.size()));
      write_file_atomic(dir / (render_id + ".svg"), doc.svg);
      out << fmt::format("wrote {}.png and {}.svg to {}\n", render_id, render_id, dir.string());
    } else if (verify->parsed()) {
      return oracles::run_suite(out) ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: code=" << to_string(e.code()) << " message=" << e.what() << '\n';
    return 1;
  } catch (const fs::filesystem_error& e) {
    err << "error: code=" << to_string(ErrorCode::IoFailure) << " message=" << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spatialkit
