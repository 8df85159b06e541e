#include "spatialkit/dataset.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"
#include "spatialkit/parallel.hpp"
#include "spatialkit/render.hpp"

namespace spatialkit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

json cell_json(Cell c) { return json::array({c.col, c.row}); }
Cell cell_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json cells_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (Cell c : cells) out.push_back(cell_json(c));
  return out;
}

std::vector<Cell> cells_from(const json& j) {
  std::vector<Cell> out;
  for (const auto& c : j) out.push_back(cell_from(c));
  return out;
}

json objects_json(const std::vector<SceneObject>& objects) {
  json out = json::array();
  for (const auto& o : objects) {
    out.push_back({{"label", o.label}, {"x", o.point.x}, {"y", o.point.y}});
  }
  return out;
}

std::vector<SceneObject> objects_from(const json& j) {
  std::vector<SceneObject> out;
  for (const auto& o : j) {
    out.push_back({o.at("label").get<std::string>(),
                   Point{o.at("x").get<int>(), o.at("y").get<int>()}});
  }
  return out;
}

json lineage_json(std::uint64_t seed, std::uint64_t index) {
  return {{"master_seed", seed}, {"index", index}};
}

json query_json(const Query& q) {
  json pairs = json::array();
  for (const auto& p : q.pairs) pairs.push_back(json::array({p.first, p.second}));
  return {{"capability", to_string(q.capability)},
          {"labels", q.labels},
          {"pairs", pairs},
          {"comparison", q.comparison ? json(to_string(*q.comparison)) : json(nullptr)},
          {"mode", static_cast<int>(q.mode)},
          {"template", q.template_index}};
}

Capability capability_from(const json& j) {
  const auto text = j.get<std::string>();
  if (auto c = parse_capability(text)) return *c;
  throw Error(ErrorCode::ParseFailure, "unknown capability '" + text + "'");
}

Query query_from(const json& j) {
  Query q;
  q.capability = capability_from(j.at("capability"));
  q.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& p : j.at("pairs")) {
    q.pairs.push_back({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
  }
  if (!j.at("comparison").is_null()) {
    const auto text = j.at("comparison").get<std::string>();
    q.comparison = parse_comparison(text);
    if (!q.comparison) throw Error(ErrorCode::ParseFailure, "unknown comparison " + text);
  }
  q.mode = j.at("mode").get<int>() == 4 ? DirectionMode::Four : DirectionMode::Eight;
  q.template_index = j.at("template").get<int>();
  return q;
}

void put_item(json& j, const InstructionItem& item) {
  j["item_id"] = item.item_id;
  j["scene_id"] = item.scene_id;
  j["capability"] = to_string(item.capability);
  j["prompt"] = item.prompt;
  j["answer"] = item.answer;
  j["image"] = item.image_ref;
  j["query"] = query_json(item.query);
}

InstructionItem item_from(const json& j) {
  InstructionItem item;
  item.item_id = j.at("item_id").get<std::string>();
  item.scene_id = j.at("scene_id").get<std::string>();
  item.capability = capability_from(j.at("capability"));
  item.prompt = j.at("prompt").get<std::string>();
  item.answer = j.at("answer").get<std::string>();
  item.image_ref = j.at("image").get<std::string>();
  item.query = query_from(j.at("query"));
  return item;
}

void put_scene(json& j, const Scene& scene) {
  j["objects"] = objects_json(scene.objects);
  j["lineage"] = lineage_json(scene.seed, scene.index);
}

Scene scene_from(const json& j) {
  Scene scene;
  scene.scene_id = j.at("scene_id").get<std::string>();
  scene.seed = j.at("lineage").at("master_seed").get<std::uint64_t>();
  scene.index = j.at("lineage").at("index").get<std::uint64_t>();
  scene.objects = objects_from(j.at("objects"));
  return scene;
}


ImageDocument render_record(const ManifestRecord& record) {
  return std::visit(
      overloaded{
          [](const TrainRecord& r) { return render_scene(r.scene); },
          [](const McqRecord& r) { return render_scene(r.scene); },
          [](const SppRecord& r) { return render_spp(r.instance); },
          [](const TspRecord& r) { return render_tsp(r.instance); },
      },
      record);
}

std::string tour_bin(double length) {
  const int lo = static_cast<int>(std::floor(length / 250.0)) * 250;
  return fmt::format("{}-{}", lo, lo + 250);
}

}  // namespace

json to_json(const ManifestRecord& record) {
  return std::visit(
      overloaded{
          [](const TrainRecord& r) {
            json j;
            j["type"] = "train";
            put_item(j, r.item);
            put_scene(j, r.scene);
            return j;
          },
          [](const McqRecord& r) {
            json j;
            j["type"] = "basic";
            put_item(j, r.mcq.item);
            j["options"] = r.mcq.options;
            j["answer_key"] = std::string(1, r.mcq.answer_key);
            put_scene(j, r.scene);
            return j;
          },
          [](const SppRecord& r) {
            const auto& in = r.instance;
            return json{
                {"type", "spp"},
                {"item_id", r.item_id},
                {"instance_id", in.instance_id},
                {"prompt", r.prompt},
                {"image", r.image_ref},
                {"grid_n", in.grid_n},
                {"start", cell_json(in.start)},
                {"end", cell_json(in.end)},
                {"obstacles", cells_json(in.obstacles)},
                {"answer", format_path(r.solution.path)},
                {"solution",
                 {{"optimal_length", r.solution.optimal_length},
                  {"path", cells_json(r.solution.path)},
                  {"optimal_path_count", r.solution.optimal_path_count}}},
                {"lineage", lineage_json(in.seed, in.index)},
            };
          },
          [](const TspRecord& r) {
            const auto& in = r.instance;
            return json{
                {"type", "tsp"},
                {"item_id", r.item_id},
                {"instance_id", in.instance_id},
                {"prompt", r.prompt},
                {"image", r.image_ref},
                {"objects", objects_json(in.objects)},
                {"start_label", in.start_label},
                {"answer", format_order(r.solution.order)},
                {"solution",
                 {{"order", r.solution.order}, {"tour_length", r.solution.tour_length}}},
                {"lineage", lineage_json(in.seed, in.index)},
            };
          },
      },
      record);
}

ManifestRecord record_from_json(const json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "train") return TrainRecord{item_from(j), scene_from(j)};
    if (type == "basic") {
      McqRecord r;
      r.mcq.item = item_from(j);
      r.mcq.options = j.at("options").get<std::array<std::string, 4>>();
      const auto key = j.at("answer_key").get<std::string>();
      if (key.size() != 1 || key[0] < 'A' || key[0] > 'D') {
        throw Error(ErrorCode::ParseFailure, "bad answer_key '" + key + "'");
      }
      r.mcq.answer_key = key[0];
      r.scene = scene_from(j);
      return r;
    }
    if (type == "spp") {
      SppRecord r;
      r.item_id = j.at("item_id").get<std::string>();
      r.prompt = j.at("prompt").get<std::string>();
      r.image_ref = j.at("image").get<std::string>();
      auto& in = r.instance;
      in.instance_id = j.at("instance_id").get<std::string>();
      in.grid_n = j.at("grid_n").get<int>();
      in.start = cell_from(j.at("start"));
      in.end = cell_from(j.at("end"));
      in.obstacles = cells_from(j.at("obstacles"));
      in.seed = j.at("lineage").at("master_seed").get<std::uint64_t>();
      in.index = j.at("lineage").at("index").get<std::uint64_t>();
      const auto& s = j.at("solution");
      r.solution.optimal_length = s.at("optimal_length").get<int>();
      r.solution.path = cells_from(s.at("path"));
      r.solution.optimal_path_count = s.at("optimal_path_count").get<std::uint64_t>();
      return r;
    }
    if (type == "tsp") {
      TspRecord r;
      r.item_id = j.at("item_id").get<std::string>();
      r.prompt = j.at("prompt").get<std::string>();
      r.image_ref = j.at("image").get<std::string>();
      auto& in = r.instance;
      in.instance_id = j.at("instance_id").get<std::string>();
      in.objects = objects_from(j.at("objects"));
      in.start_label = j.at("start_label").get<std::string>();
      in.seed = j.at("lineage").at("master_seed").get<std::uint64_t>();
      in.index = j.at("lineage").at("index").get<std::uint64_t>();
      const auto& s = j.at("solution");
      r.solution.order = s.at("order").get<std::vector<std::string>>();
      r.solution.tour_length = s.at("tour_length").get<double>();
      return r;
    }
    throw Error(ErrorCode::ParseFailure, "unknown record type '" + type + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseFailure, std::string("malformed record: ") + e.what());
  }
}

std::string to_jsonl(std::span<const ManifestRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoFailure, "cannot rename onto " + path.string());
  }
}

std::vector<ManifestRecord> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot read " + path.string());
  std::vector<ManifestRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(record_from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseFailure,
                  fmt::format("{}:{}: {}", path.string(), line_no, e.what()));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}:{}: {}", path.string(), line_no, e.what()));
    }
  }
  return records;
}

fs::path write_dataset(std::span<const ManifestRecord> records,
                       const fs::path& out_dir, const WriteOptions& options) {
  std::error_code ec;
  fs::create_directories(out_dir / "images", ec);
  if (ec) {
    throw Error(ErrorCode::IoFailure,
                fmt::format("cannot create {}: {}", (out_dir / "images").string(),
                            ec.message()));
  }

  if (options.images) {
    std::vector<const ManifestRecord*> distinct;
    std::unordered_set<std::string> seen;
    for (const auto& r : records) {
      if (seen.insert(image_of(r)).second) distinct.push_back(&r);
    }
    parallel_for(distinct.size(), options.jobs, [&](std::size_t i) {
      const ManifestRecord& r = *distinct[i];
      const ImageDocument doc = render_record(r);
      fs::path png = out_dir / image_of(r);
      fs::path svg = png;
      svg.replace_extension(".svg");
      write_file_atomic(png, std::string_view(reinterpret_cast<const char*>(doc.png.data()),
                                           doc.png.size()));
      write_file_atomic(svg, doc.svg);
    });
  }

  const fs::path manifest = out_dir / kManifestName;
  write_file_atomic(manifest, to_jsonl(records));
  return manifest;
}

std::optional<std::string> validate_record(const ManifestRecord& record) {
  try {
    return std::visit(
        overloaded{
            [](const TrainRecord& r) -> std::optional<std::string> {
              const auto expected = ground_truth_answer(r.scene, r.item.query);
              if (expected != r.item.answer) {
                return fmt::format("{}: answer '{}' but scene gives '{}'",
                                   r.item.item_id, r.item.answer, expected);
              }
              return std::nullopt;
            },
            [](const McqRecord& r) -> std::optional<std::string> {
              const auto& m = r.mcq;
              const auto expected = ground_truth_answer(r.scene, m.item.query);
              const auto slot = static_cast<std::size_t>(m.answer_key - 'A');
              if (slot > 3 || m.options[slot] != expected || m.item.answer != expected) {
                return fmt::format("{}: key {} does not hold '{}'", m.item.item_id,
                                   m.answer_key, expected);
              }
              std::set<std::string> distinct(m.options.begin(), m.options.end());
              if (distinct.size() != 4) {
                return m.item.item_id + ": options are not distinct";
              }
              return std::nullopt;
            },
            [](const SppRecord& r) -> std::optional<std::string> {
              if (solve_spp(r.instance) != r.solution) {
                return r.item_id + ": stored solution differs from solver";
              }
              return std::nullopt;
            },
            [](const TspRecord& r) -> std::optional<std::string> {
              if (solve_tsp(r.instance).order != r.solution.order) {
                return r.item_id + ": stored tour differs from solver";
              }
              return std::nullopt;
            },
        },
        record);
  } catch (const Error& e) {
    return fmt::format("{}: {}", item_id_of(record), e.what());
  }
}

DatasetCheck validate_dataset(const fs::path& dataset_dir, bool require_images) {
  DatasetCheck check;
  const auto records = read_manifest(dataset_dir / kManifestName);
  check.records = records.size();
  for (const auto& r : records) {
    if (auto problem = validate_record(r)) check.problems.push_back(std::move(*problem));
    if (require_images && !fs::exists(dataset_dir / image_of(r))) {
      check.problems.push_back("missing image " + image_of(r));
    }
  }
  return check;
}

bool NaturalLess::operator()(const std::string& l, const std::string& r) const {
  auto leading_number = [](const std::string& s) -> std::optional<long> {
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) return std::nullopt;
    return std::stol(s);
  };
  const auto nl = leading_number(l);
  const auto nr = leading_number(r);
  if (nl && nr && *nl != *nr) return *nl < *nr;
  return l < r;
}

double FrequencyTable::frequency(const std::string& key) const {
  const auto it = counts.find(key);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

const FrequencyTable* StatsReport::find(const std::string& name) const {
  const auto it = tables.find(name);
  return it == tables.end() ? nullptr : &it->second;
}

StatsReport stats(std::span<const ManifestRecord> records) {
  StatsReport report;
  auto& t = report.tables;
  std::unordered_set<std::string> scenes_seen;
  auto add_objects = [&](const std::string& table, const Scene& scene) {
    if (!scenes_seen.insert(scene.scene_id).second) return;
    for (const auto& obj : scene.objects) {
      t[table].add(std::string(label(region_of(obj.point))));
    }
  };

  for (const auto& record : records) {
    std::visit(
        overloaded{
            [&](const TrainRecord& r) {
              const auto& item = r.item;
              switch (item.capability) {
                case Capability::Direction:
                  t["train/direction"].add(item.answer);
                  break;
                case Capability::DistanceCompare:
                  t["train/distance-compare"].add(
                      std::string(to_string(item.query.comparison.value())));
                  break;
                case Capability::LocalizationRegion:
                  t["train/localization-region"].add(item.answer);
                  break;
                default: break;
              }
              add_objects("train/object-region", r.scene);
            },
            [&](const McqRecord& r) {
              const auto& item = r.mcq.item;
              switch (item.capability) {
                case Capability::Direction:
                  t["eval/direction"].add(item.answer);
                  break;
                case Capability::DistanceCompare:
                  t["eval/distance-compare"].add(
                      std::string(to_string(item.query.comparison.value())));
                  break;
                case Capability::LocalizationRegion:
                  t["eval/localization-region"].add(item.answer);
                  break;
                default: break;
              }
              t["eval/answer-key"].add(std::string(1, r.mcq.answer_key));
              add_objects("eval/object-region", r.scene);
            },
            [&](const SppRecord& r) {
              t[fmt::format("spp/{}Grid/optimal-length", r.instance.grid_n)].add(
                  std::to_string(r.solution.optimal_length));
            },
            [&](const TspRecord& r) {
              t[fmt::format("tsp/{}Obj/tour-length", r.instance.objects.size())].add(
                  tour_bin(r.solution.tour_length));
            },
        },
        record);
  }
  return report;
}

json to_json(const StatsReport& report) {
  json out = json::object();
  for (const auto& [name, table] : report.tables) {
    json freq = json::object();
    json counts = json::object();
    for (const auto& [key, n] : table.counts) {
      counts[key] = n;
      freq[key] = table.frequency(key);
    }
    out[name] = {{"total", table.total}, {"counts", counts}, {"frequencies", freq}};
  }
  return out;
}

std::string to_text(const StatsReport& report) {
  std::string out;
  for (const auto& [name, table] : report.tables) {
    out += fmt::format("{} (n={})\n", name, table.total);
    for (const auto& [key, n] : table.counts) {
      out += fmt::format("  {:<16}{:>9}{:>9.2f}%\n", key, n, 100.0 * table.frequency(key));
    }
  }
  return out;
}

}  // namespace spatialkit
