#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ulrichnorm/normality/verdict.hpp"

namespace ulrichnorm::report {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

/// "table", "json", "csv"; throws InputError otherwise.
Format format_from_string(const std::string& s);

/// Which operation produced a column.
struct Provenance {
  std::string column;
  std::string operation;
  std::string description;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ScanRow {
  std::vector<std::int64_t> params;
  std::vector<std::string> values;
  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// A grid of verdicts and values. Values are strings: exact rationals "p" or
/// "p/q", verdict labels, or booleans "true"/"false".
struct ScanReport {
  std::string name;
  std::vector<std::string> parameters;
  std::vector<std::string> columns;
  std::vector<ScanRow> rows;
  std::vector<Provenance> provenance;
  std::vector<std::string> summary;

  /// Lexicographic by parameters.
  void sort_rows();
  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// A single case: named invariants, named verdicts, free notes.
struct CaseReport {
  std::string subject;
  std::vector<std::pair<std::string, std::string>> invariants;
  std::vector<std::pair<std::string, NormalityVerdict>> verdicts;
  std::vector<std::string> notes;
  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

Json to_json(const Witness& w);
Json to_json(const NormalityVerdict& v);
Json to_json(const ScanReport& r);
Json to_json(const CaseReport& r);

/// Inverses of to_json; throw InputError on malformed documents.
NormalityVerdict verdict_from_json(const Json& j);
ScanReport scan_from_json(const Json& j);
CaseReport case_from_json(const Json& j);

std::string render(const ScanReport& r, Format f);
std::string render(const CaseReport& r, Format f);

}  // namespace ulrichnorm::report
