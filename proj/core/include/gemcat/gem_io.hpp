// Copyright 2026 The gemcat Authors.
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gemcat/coloured_graph.hpp"

namespace gemcat {

// Gem text format:
//   <n_plus_one> <order>
//   one line per colour: the partner of vertex 1..order, space separated.
std::string to_gem_text(const ColouredGraph& g);
ColouredGraph parse_gem_text(std::string_view text, Connectivity connectivity = Connectivity::Required);

ColouredGraph read_gem_file(const std::filesystem::path& path);
void write_gem_file(const std::filesystem::path& path, const ColouredGraph& g);

// Whole-file helpers shared by the catalogue formats.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace gemcat
