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

#include "gemcat/gem_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gemcat/error.hpp"

namespace gemcat {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<int> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw GemError(ErrorKind::Format, "line " + std::to_string(line_no) + ": expected an integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

std::string to_gem_text(const ColouredGraph& g) {
  std::string out = std::to_string(g.colours()) + " " + std::to_string(g.order()) + "\n";
  for (Colour c = 0; c < g.colours(); ++c) {
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (v > 1) out += ' ';
      out += std::to_string(g.partner(c, v));
    }
    out += '\n';
  }
  return out;
}

ColouredGraph parse_gem_text(std::string_view text, Connectivity connectivity) {
  const auto lines = split_lines(text);
  std::size_t at = 0;
  auto next_line = [&]() -> std::pair<std::string_view, std::size_t> {
    while (at < lines.size() && lines[at].find_first_not_of(" \t") == std::string_view::npos) ++at;
    if (at >= lines.size()) {
      throw GemError(ErrorKind::Format, "line " + std::to_string(at + 1) + ": unexpected end of input");
    }
    const std::size_t no = at + 1;
    return {lines[at++], no};
  };
  auto [header, header_no] = next_line();
  const auto head = parse_ints(header, header_no);
  if (head.size() != 2) {
    throw GemError(ErrorKind::Format,
                   "line " + std::to_string(header_no) + ": expected '<n_plus_one> <order>'");
  }
  const int colours = head[0];
  const int order = head[1];
  if (colours < 1 || colours > kMaxColours || order < 0 || order > 1'000'000) {
    throw GemError(ErrorKind::Format, "line " + std::to_string(header_no) + ": bad header values");
  }
  std::vector<std::vector<Vertex>> matchings;
  for (Colour c = 0; c < colours; ++c) {
    auto [line, no] = next_line();
    auto values = parse_ints(line, no);
    if (static_cast<int>(values.size()) != order) {
      throw GemError(ErrorKind::Format, "line " + std::to_string(no) + ": expected " +
                                            std::to_string(order) + " partners, found " +
                                            std::to_string(values.size()));
    }
    matchings.push_back(std::move(values));
  }
  return ColouredGraph::build(colours, order, matchings, connectivity);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GemError(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GemError(ErrorKind::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw GemError(ErrorKind::Io, "write failed for " + path.string());
}

ColouredGraph read_gem_file(const std::filesystem::path& path) { return parse_gem_text(read_text_file(path)); }

void write_gem_file(const std::filesystem::path& path, const ColouredGraph& g) {
  write_text_file(path, to_gem_text(g));
}

}  // namespace gemcat
