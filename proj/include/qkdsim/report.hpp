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

// Report rendering. Every document is built as an ordered JSON tree and
// then emitted as JSON, CSV (one header row, one value row, dotted keys)
// or "key: value" text. Reals are always written with 17 significant
// digits, so all three renderings carry identical value strings.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qkdsim {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

/// Leaf (dotted path, rendered value) pairs in document order; arrays use
/// the element index as the path component.
std::vector<std::pair<std::string, std::string>> flatten(const Json &doc);

std::string render_json(const Json &doc);
std::string render_csv(const Json &doc);
std::string render_text(const Json &doc);
std::string render(const Json &doc, OutputFormat format);

/// Writes `text` to `path`; throws IoError when the file cannot be written.
void write_file(const std::string &path, std::string_view text);

}  // namespace qkdsim
