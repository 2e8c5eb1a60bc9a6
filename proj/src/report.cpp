// Copyright 2026 The qkdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qkdsim/report.hpp"

#include <fstream>

#include "qkdsim/errors.hpp"
#include "qkdsim/format.hpp"

namespace qkdsim {

namespace {

std::string scalar(const Json &v) {
  if (v.is_number_float()) return format_real(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Json &v, int depth, std::string &out) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto &[key, child] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      emit(child, depth + 1, out);
    }
    out += "\n" + close_pad + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      emit(v[i], depth + 1, out);
    }
    out += "\n" + close_pad + "]";
  } else if (v.is_number_float()) {
    out += format_real(v.get<double>());
  } else {
    out += v.dump();
  }
}

void flatten_into(const Json &v, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out) {
  auto join = [&](const std::string &key) { return prefix.empty() ? key : prefix + "." + key; };
  if (v.is_object()) {
    for (const auto &[key, child] : v.items()) flatten_into(child, join(key), out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten_into(v[i], join(std::to_string(i)), out);
  } else {
    out.emplace_back(prefix, scalar(v));
  }
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw InvalidInput("unknown output format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Text:
      return "text";
  }
  return "?";
}

std::vector<std::pair<std::string, std::string>> flatten(const Json &doc) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(doc, "", out);
  return out;
}

std::string render_json(const Json &doc) {
  std::string out;
  emit(doc, 0, out);
  return out + "\n";
}

std::string render_csv(const Json &doc) {
  std::string header, values;
  for (const auto &[key, value] : flatten(doc)) {
    if (!header.empty()) {
      header += ",";
      values += ",";
    }
    header += csv_field(key);
    values += csv_field(value);
  }
  return header + "\n" + values + "\n";
}

std::string render_text(const Json &doc) {
  std::string out;
  for (const auto &[key, value] : flatten(doc)) out += key + ": " + value + "\n";
  return out;
}

std::string render(const Json &doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return render_json(doc);
    case OutputFormat::Csv:
      return render_csv(doc);
    case OutputFormat::Text:
      return render_text(doc);
  }
  return {};
}

void write_file(const std::string &path, std::string_view text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace qkdsim
