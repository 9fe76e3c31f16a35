// Copyright 2026 The Split-Rephrase Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reproducibility envelope written next to every command output.

#ifndef SPLITREPHRASE_MANIFEST_H_
#define SPLITREPHRASE_MANIFEST_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace splitrephrase {

inline constexpr char kToolVersion[] = "0.1.0";

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
// Throws Error when the file cannot be read.
std::string sha256_file(const std::string& path);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> input_digests;  // path -> sha256
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> outputs;
  std::string version = kToolVersion;

  void add_input(const std::string& path);
  nlohmann::json to_json() const;
};

// Where a command's manifest goes: the explicit path, else "<out>.manifest.json",
// else "<command>.manifest.json" in the working directory.
std::string manifest_path(const std::string& explicit_path,
                          const std::string& primary_output,
                          const std::string& command);

void write_manifest(const RunManifest& manifest, const std::string& path);

}  // namespace splitrephrase

#endif  // SPLITREPHRASE_MANIFEST_H_
