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

#include "gemcat/catalogue.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "gemcat/error.hpp"
#include "gemcat/gem_io.hpp"

namespace gemcat {

namespace {

using nlohmann::json;

int code_order(const Code& code) {
  const auto& s = code.str();
  const auto first = s.find(':');
  const auto second = s.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw GemError(ErrorKind::Format, "malformed code " + s);
  }
  return std::stoi(s.substr(first + 1, second - first - 1));
}

}  // namespace

std::string_view kind_name(CatalogueKind kind) {
  switch (kind) {
    case CatalogueKind::S3:
      return "s3";
    case CatalogueKind::Bipartite:
      return "bipartite";
    case CatalogueKind::NonBipartite:
      return "nonbipartite";
  }
  return "?";
}

CatalogueFile make_catalogue(int order, CatalogueKind kind, const std::vector<ColouredGraph>& graphs) {
  CatalogueFile file;
  file.order = order;
  file.kind = kind;
  file.n = kind == CatalogueKind::S3 ? 3 : 4;
  for (const auto& g : graphs) file.codes.push_back(code(g));
  std::sort(file.codes.begin(), file.codes.end());
  file.codes.erase(std::unique(file.codes.begin(), file.codes.end()), file.codes.end());
  return file;
}

std::string catalogue_text(const CatalogueFile& file) {
  std::string out = "# gemcat catalogue n=" + std::to_string(file.n) + " order=" + std::to_string(file.order) +
                    " kind=" + std::string(kind_name(file.kind)) + "\n";
  auto codes = file.codes;
  std::sort(codes.begin(), codes.end());
  for (const auto& c : codes) out += c.str() + "\n";
  return out;
}

CatalogueFile parse_catalogue(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw GemError(ErrorKind::Format, "line 1: missing catalogue header");
  CatalogueFile file;
  {
    std::istringstream header(line);
    std::vector<std::string> words;
    for (std::string word; header >> word;) words.push_back(word);
    if (words.size() != 6 || words[0] != "#" || words[1] != "gemcat" || words[2] != "catalogue" ||
        words[3].rfind("n=", 0) != 0 || words[4].rfind("order=", 0) != 0 || words[5].rfind("kind=", 0) != 0) {
      throw GemError(ErrorKind::Format, "line 1: expected `# gemcat catalogue n=.. order=.. kind=..`");
    }
    try {
      file.n = std::stoi(words[3].substr(2));
      file.order = std::stoi(words[4].substr(6));
    } catch (const std::exception&) {
      throw GemError(ErrorKind::Format, "line 1: bad header fields");
    }
    const std::string kind_field = words[5];
    const auto kind = kind_field.substr(5);
    if (kind == "s3") {
      file.kind = CatalogueKind::S3;
    } else if (kind == "bipartite") {
      file.kind = CatalogueKind::Bipartite;
    } else if (kind == "nonbipartite") {
      file.kind = CatalogueKind::NonBipartite;
    } else {
      throw GemError(ErrorKind::Format, "line 1: unknown kind " + kind);
    }
  }
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Code c(line);
    try {
      if (code_order(c) != file.order) throw GemError(ErrorKind::Format, "order differs from header");
      if (!file.codes.empty() && !(file.codes.back() < c)) {
        throw GemError(ErrorKind::Format, "codes must be strictly increasing");
      }
    } catch (const std::exception& e) {
      throw GemError(ErrorKind::Format, "line " + std::to_string(line_no) + ": " + e.what());
    }
    file.codes.push_back(std::move(c));
  }
  return file;
}

CatalogueFile read_catalogue(const std::filesystem::path& path) { return parse_catalogue(read_text_file(path)); }

void write_catalogue(const std::filesystem::path& path, const CatalogueFile& file) {
  write_text_file(path, catalogue_text(file));
}

std::string invariant_record_line(const Code& code, const InvariantRecord& record) {
  json j;
  j["code"] = code.str();
  j["order"] = record.order;
  j["bipartite"] = record.bipartite;
  j["chi"] = record.chi;
  j["rank_bound"] = record.rank_bound;
  j["beta2"] = record.beta2 ? json(*record.beta2) : json(nullptr);
  if (record.regular_genus) {
    json by_perm = json::object();
    for (const auto& [eps, rho] : record.genus_by_permutation) {
      std::string key;
      for (Colour c : eps) key += std::to_string(c);
      by_perm[key] = rho;
    }
    j["genus"] = {{"regular", *record.regular_genus}, {"by_permutation", by_perm}};
  } else {
    j["genus"] = nullptr;
  }
  j["simple"] = record.simple;
  return j.dump();
}

std::string invariant_records(const std::vector<Code>& codes) {
  auto sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& c : sorted) out += invariant_record_line(c, invariants(graph_from_code(c))) + "\n";
  return out;
}

std::vector<LabelledCode> parse_representatives(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<LabelledCode> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string label, code_text, extra;
    if (!(row >> label) || label[0] == '#') continue;
    if (!(row >> code_text) || (row >> extra)) {
      throw GemError(ErrorKind::Format, "line " + std::to_string(line_no) + ": expected `<label> <code>`");
    }
    out.push_back({label, Code(code_text)});
  }
  return out;
}

std::string partition_report(const ClassPartition& partition, const std::vector<Code>& codes) {
  std::vector<json> by_class(partition.classes.size());
  for (std::size_t k = 0; k < partition.classes.size(); ++k) {
    json& j = by_class[k];
    j["class_id"] = k;
    j["label"] = partition.labels.size() > k && partition.labels[k] ? json(*partition.labels[k]) : json(nullptr);
    std::vector<std::string> members;
    std::map<std::string, int> sizes;
    for (std::size_t g : partition.classes[k]) {
      members.push_back(codes[g].str());
      ++sizes[std::to_string(code_order(codes[g]))];
    }
    std::sort(members.begin(), members.end());
    j["size"] = members.size();
    j["sizes_by_order"] = sizes;
    j["members"] = members;
    j["merged_by"] = json::array();
    // Separation from other classes is "not merged", never a proof.
    j["status"] = "not merged with other classes";
  }
  for (const auto& w : partition.witnesses) {
    json e;
    e["graph"] = codes[w.graph].str();
    e["params"] = w.params ? json(to_string(*w.params)) : json(nullptr);
    e["owner"] = codes[w.owner].str();
    e["owner_params"] = w.owner_params ? json(to_string(*w.owner_params)) : json(nullptr);
    e["image"] = w.image.str();
    e["handles"] = w.handles;
    by_class[partition.class_of[w.graph]]["merged_by"].push_back(std::move(e));
  }
  std::string out;
  for (const auto& j : by_class) out += j.dump() + "\n";
  return out;
}

CatalogueSummary summarize(const std::vector<CatalogueFile>& catalogues, const std::vector<std::string>& reports) {
  CatalogueSummary s;
  for (const auto& cat : catalogues) {
    auto& row = s.by_order[cat.order];
    const int count = static_cast<int>(cat.codes.size());
    switch (cat.kind) {
      case CatalogueKind::S3:
        row.s3 = count;
        break;
      case CatalogueKind::Bipartite:
        row.bipartite = count;
        break;
      case CatalogueKind::NonBipartite:
        row.nonbipartite = count;
        break;
    }
  }
  for (const auto& report : reports) {
    std::istringstream in(report);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception& e) {
        throw GemError(ErrorKind::Format, "line " + std::to_string(line_no) + ": " + e.what());
      }
      ClassSummary cls;
      if (j.contains("label") && j["label"].is_string()) cls.label = j["label"].get<std::string>();
      for (const auto& [order, size] : j.at("sizes_by_order").items()) {
        cls.size_by_order[std::stoi(order)] = size.get<int>();
      }
      cls.min_order = cls.size_by_order.empty() ? 0 : cls.size_by_order.begin()->first;
      s.classes.push_back(std::move(cls));
    }
  }
  return s;
}

std::string summary_text(const CatalogueSummary& summary, int n) {
  std::ostringstream out;
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << "order\tS3\tC\tC~\n";
  for (const auto& [order, row] : summary.by_order) {
    out << order << '\t' << cell(row.s3) << '\t' << cell(row.bipartite) << '\t' << cell(row.nonbipartite) << '\n';
  }
  if (summary.classes.empty()) return out.str();
  out << "\nclass\tlabel\tmin_order\tk\tsizes\n";
  for (std::size_t i = 0; i < summary.classes.size(); ++i) {
    const auto& c = summary.classes[i];
    out << i << '\t' << c.label.value_or("?") << '\t' << c.min_order << '\t' << c.complexity() << '\t';
    bool first = true;
    for (const auto& [order, size] : c.size_by_order) {
      out << (first ? "" : ",") << order << ':' << size;
      first = false;
    }
    out << '\n';
  }
  out << "\nderived\tlabel\tk\n";
  for (const auto& c : summary.classes) {
    if (!c.label) continue;
    const std::string base = *c.label == "S4" ? "" : *c.label + "#";
    out << "handle\t" << base << "S1xS3\t" << c.complexity() + n << '\n';
    out << "handle\t" << base << "S1~xS3\t" << c.complexity() + n << '\n';
  }
  return out.str();
}

}  // namespace gemcat
