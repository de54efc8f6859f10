// Copyright 2026 The NondetCheck Authors
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

#include "ndcheck/contracts.h"

#include <cctype>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace ndcheck {

namespace fs = std::filesystem;

std::string NormalizeProofName(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

void ProofIndex::Add(std::string_view property, std::string file) {
  proofs_.emplace(NormalizeProofName(property), std::move(file));
}

std::optional<std::string> ProofIndex::Find(std::string_view property) const {
  auto it = proofs_.find(NormalizeProofName(property));
  if (it == proofs_.end()) return std::nullopt;
  return it->second;
}

ProofIndex ScanProofs(const fs::path& dir) {
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) {
    throw ConfigError("cannot read proof directory " + dir.string() + ": " +
                      ec.message());
  }
  ProofIndex index;
  for (; it != fs::directory_iterator(); it.increment(ec)) {
    if (ec) {
      throw ConfigError("cannot read proof directory " + dir.string() + ": " +
                        ec.message());
    }
    const std::string file = it->path().filename().string();
    const auto dot = file.find('.');
    // The extension is required: "proof-t" alone does not count.
    if (dot == std::string::npos || dot + 1 == file.size()) continue;
    const std::string stem = file.substr(0, dot);
    if (stem.size() <= 6) continue;
    if (NormalizeProofName(stem.substr(0, 5)) != "proof" || stem[5] != '-') continue;
    index.Add(stem.substr(6), file);
  }
  return index;
}

std::vector<TestSpec> ApplyProofs(std::vector<TestSpec> specs,
                                  const ProofIndex& index) {
  for (auto& s : specs) {
    if (auto file = index.Find(s.name)) s.proof_file = std::move(*file);
  }
  return specs;
}

}  // namespace ndcheck
