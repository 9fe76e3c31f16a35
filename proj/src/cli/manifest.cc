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

#include "splitrephrase/manifest.h"

#include <openssl/evp.h>

#include <fstream>
#include <memory>
#include <sstream>

#include "splitrephrase/annotation.h"

namespace splitrephrase {

std::string sha256_hex(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

void RunManifest::add_input(const std::string& path) {
  input_digests[path] = sha256_file(path);
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [path, digest] : input_digests) {
    inputs[path] = {{"sha256", digest}};
  }
  return {{"command", command},
          {"inputs", inputs},
          {"config", config},
          {"outputs", outputs},
          {"version", version}};
}

std::string manifest_path(const std::string& explicit_path,
                          const std::string& primary_output,
                          const std::string& command) {
  if (!explicit_path.empty()) return explicit_path;
  if (!primary_output.empty() && primary_output != "-") {
    return primary_output + ".manifest.json";
  }
  return command + ".manifest.json";
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest '" + path + "'");
  out << manifest.to_json().dump(2) << '\n';
}

}  // namespace splitrephrase
