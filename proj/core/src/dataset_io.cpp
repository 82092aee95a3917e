#include "cspacevis/dataset_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cspacevis/errors.hpp"

namespace cspacevis {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw InputError("line " + std::to_string(line_no) + ": cannot parse number '" +
                     std::string(field) + "'");
  }
  return v;
}

Label parse_label(std::string_view field, std::size_t line_no) {
  if (field == "0") return Label::Free;
  if (field == "1") return Label::Collision;
  throw InputError("line " + std::to_string(line_no) + ": label must be 0 or 1, got '" +
                   std::string(field) + "'");
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

}  // namespace

std::string dataset_to_json(const Dataset& ds) {
  validate(ds);
  json j;
  j["n_joints"] = ds.n_joints;
  j["workspace_id"] = ds.workspace_id;
  j["seed"] = ds.seed;
  json samples = json::array();
  for (const auto& q : ds.samples) samples.push_back(q.angles);
  j["samples"] = std::move(samples);
  json labels = json::array();
  for (Label l : ds.labels) labels.push_back(static_cast<int>(l));
  j["labels"] = std::move(labels);
  return j.dump() + "\n";
}

Dataset dataset_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("dataset JSON: ") + e.what());
  }
  Dataset ds;
  try {
    ds.n_joints = j.at("n_joints").get<std::size_t>();
    ds.workspace_id = j.value("workspace_id", std::string{});
    ds.seed = j.value("seed", std::uint64_t{0});
    for (const auto& row : j.at("samples")) {
      ds.samples.push_back(Configuration{row.get<std::vector<double>>()});
    }
    for (const auto& l : j.at("labels")) {
      const int v = l.get<int>();
      if (v != 0 && v != 1) throw InputError("dataset JSON: label must be 0 or 1");
      ds.labels.push_back(static_cast<Label>(v));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("dataset JSON: ") + e.what());
  }
  validate(ds);
  return ds;
}

std::string dataset_to_csv(const Dataset& ds) {
  validate(ds);
  std::string out;
  for (std::size_t i = 0; i < ds.n_joints; ++i) {
    out += "theta_" + std::to_string(i) + ",";
  }
  out += "label\n";
  for (std::size_t k = 0; k < ds.size(); ++k) {
    for (double a : ds.samples[k].angles) {
      append_double(out, a);
      out += ',';
    }
    out += ds.labels[k] == Label::Free ? "0\n" : "1\n";
  }
  return out;
}

Dataset dataset_from_csv(std::string_view text, std::string workspace_id, std::uint64_t seed) {
  Dataset ds;
  ds.workspace_id = std::move(workspace_id);
  ds.seed = seed;

  std::size_t line_no = 0;
  bool have_header = false;
  bool has_label = false;
  std::size_t columns = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.empty()) continue;

    const auto fields = split(line, ',');
    if (!have_header) {
      columns = fields.size();
      has_label = fields.back() == "label";
      ds.n_joints = has_label ? columns - 1 : columns;
      for (std::size_t i = 0; i < ds.n_joints; ++i) {
        if (fields[i] != "theta_" + std::to_string(i)) {
          throw InputError("CSV header column " + std::to_string(i) + " must be theta_" +
                           std::to_string(i));
        }
      }
      have_header = true;
      continue;
    }
    if (fields.size() != columns) {
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(columns) + " fields, got " + std::to_string(fields.size()));
    }
    Configuration q;
    q.angles.reserve(ds.n_joints);
    for (std::size_t i = 0; i < ds.n_joints; ++i) q.angles.push_back(parse_double(fields[i], line_no));
    ds.samples.push_back(std::move(q));
    ds.labels.push_back(has_label ? parse_label(fields.back(), line_no) : Label::Free);
  }
  if (!have_header) throw InputError("CSV input is empty");
  validate(ds);
  return ds;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw InputError("short write to " + path.string());
}

Dataset load_dataset(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".csv") return dataset_from_csv(text, path.stem().string());
  return dataset_from_json(text);
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path) {
  write_text_file(path, path.extension() == ".csv" ? dataset_to_csv(ds) : dataset_to_json(ds));
}

}  // namespace cspacevis
