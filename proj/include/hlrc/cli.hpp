#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hlrc/codes.hpp"
#include "hlrc/construct.hpp"

namespace hlrc {

inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int { kExitOk = 0, kExitInvariant = 1, kExitUsage = 2 };

struct AnalyzeResult {
  nlohmann::ordered_json report;
  bool ok = false;
};

/// Full report for one construction with every cross-check it can afford.
AnalyzeResult analyze(const PuncturedSimplexSpec& spec);

struct TableEntry {
  int m = 0;
  int s = 0;
  CodeParams params;
  bool listed = false;  // distance >= 2
  bool reed_muller = false;
  std::vector<std::pair<int, int>> locality_from;  // (m-1, i) of listed dimension-(m-1) restrictions
};

struct CodeTable {
  int q = 2;
  int m_max = 0;
  int s_max = 0;
  std::vector<TableEntry> entries;  // by m, then s; only s <= m-1

  const TableEntry* find(int m, int s) const;
};

/// Parameters by brute force; edges from the classified hyperplanes.
CodeTable build_table(int q, int m_max, int s_max);
std::string table_markdown(const CodeTable& table);
std::string table_csv(const CodeTable& table);

/// Parses `r1,d1;r2,d2;...`. Throws ParseError naming the character offset.
std::vector<std::pair<std::size_t, std::size_t>> parse_locality(const std::string& text);

/// Command dispatcher behind the `hlrc` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlrc
