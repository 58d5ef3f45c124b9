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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gemcat/classification.hpp"
#include "gemcat/code.hpp"
#include "gemcat/topology.hpp"

namespace gemcat {

enum class CatalogueKind { S3, Bipartite, NonBipartite };

std::string_view kind_name(CatalogueKind kind);

// `# gemcat catalogue n=<n> order=<2p> kind=<s3|bipartite|nonbipartite>`
// followed by one Code per line in sorted order.
struct CatalogueFile {
  int n = 4;
  int order = 0;
  CatalogueKind kind = CatalogueKind::Bipartite;
  std::vector<Code> codes;
};

CatalogueFile make_catalogue(int order, CatalogueKind kind, const std::vector<ColouredGraph>& graphs);
std::string catalogue_text(const CatalogueFile& file);
CatalogueFile parse_catalogue(std::string_view text);
CatalogueFile read_catalogue(const std::filesystem::path& path);
void write_catalogue(const std::filesystem::path& path, const CatalogueFile& file);

// One JSON object per line, keyed by "code".
std::string invariant_record_line(const Code& code, const InvariantRecord& record);
std::string invariant_records(const std::vector<Code>& codes);

// `<label> <code>` per line; blank lines and `#` comments are skipped.
struct LabelledCode {
  std::string label;
  Code code;
};
std::vector<LabelledCode> parse_representatives(std::string_view text);

// One JSON object per class with member codes, sizes per order, label and
// the witnesses of the merges inside the class.
std::string partition_report(const ClassPartition& partition, const std::vector<Code>& codes);

struct ClassSummary {
  std::optional<std::string> label;
  std::map<int, int> size_by_order;
  int min_order = 0;

  // Gem-complexity witnessed by the class: min order / 2 - 1.
  int complexity() const { return min_order / 2 - 1; }
};

struct CatalogueSummary {
  struct Counts {
    std::optional<int> s3;
    std::optional<int> bipartite;
    std::optional<int> nonbipartite;
  };
  std::map<int, Counts> by_order;
  std::vector<ClassSummary> classes;
};

CatalogueSummary summarize(const std::vector<CatalogueFile>& catalogues, const std::vector<std::string>& reports);
// Table text; labelled handle-free classes also yield rows for one added
// handle with k + n.
std::string summary_text(const CatalogueSummary& summary, int n = 4);

}  // namespace gemcat
