#include "ulrichnorm/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "ulrichnorm/error.hpp"

namespace ulrichnorm::report {

namespace {

template <class Fn>
auto guarded(const char* what, Fn fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed ") + what + " JSON: " + ex.what());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string witness_text(const Witness& w) {
  return w.lhs.to_string() + " " + to_string(w.relation) + " " + w.rhs.to_string() + "  (" + w.description + ")";
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InputError("unknown format '" + s + "' (expected table, json or csv)");
}

void ScanReport::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.params < b.params; });
}

Json to_json(const Witness& w) {
  Json j;
  j["lhs"] = w.lhs.to_string();
  j["relation"] = to_string(w.relation);
  j["rhs"] = w.rhs.to_string();
  j["description"] = w.description;
  return j;
}

Json to_json(const NormalityVerdict& v) {
  Json j;
  j["label"] = v.label();
  j["status"] = to_string(v.status);
  j["k"] = v.k;
  j["tag"] = v.tag;
  j["hypothesis"] = v.hypothesis;
  j["generic"] = v.generic;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["notes"] = v.notes;
  return j;
}

NormalityVerdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    NormalityVerdict v;
    v.status = status_from_string(j.at("status").get<std::string>());
    v.k = j.at("k").get<int>();
    v.tag = j.at("tag").get<std::string>();
    v.hypothesis = j.at("hypothesis").get<std::string>();
    v.generic = j.at("generic").get<bool>();
    const Json& w = j.at("witness");
    if (!w.is_null()) {
      v.witness = Witness{Rational::parse(w.at("lhs").get<std::string>()),
                          relation_from_string(w.at("relation").get<std::string>()),
                          Rational::parse(w.at("rhs").get<std::string>()), w.at("description").get<std::string>()};
    }
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
  });
}

Json to_json(const ScanReport& r) {
  Json j;
  j["report"] = r.name;
  j["parameters"] = r.parameters;
  j["columns"] = r.columns;
  Json prov = Json::array();
  for (const Provenance& p : r.provenance) {
    prov.push_back(Json{{"column", p.column}, {"operation", p.operation}, {"description", p.description}});
  }
  j["provenance"] = std::move(prov);
  Json rows = Json::array();
  for (const ScanRow& row : r.rows) {
    Json params = Json::object();
    for (std::size_t i = 0; i < r.parameters.size() && i < row.params.size(); ++i) params[r.parameters[i]] = row.params[i];
    Json values = Json::object();
    for (std::size_t i = 0; i < r.columns.size() && i < row.values.size(); ++i) values[r.columns[i]] = row.values[i];
    rows.push_back(Json{{"params", std::move(params)}, {"values", std::move(values)}});
  }
  j["rows"] = std::move(rows);
  j["summary"] = r.summary;
  return j;
}

ScanReport scan_from_json(const Json& j) {
  return guarded("scan report", [&] {
    ScanReport r;
    r.name = j.at("report").get<std::string>();
    r.parameters = j.at("parameters").get<std::vector<std::string>>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    for (const Json& p : j.at("provenance")) {
      r.provenance.push_back(Provenance{p.at("column").get<std::string>(), p.at("operation").get<std::string>(),
                                        p.at("description").get<std::string>()});
    }
    for (const Json& row : j.at("rows")) {
      ScanRow out;
      for (const std::string& name : r.parameters) out.params.push_back(row.at("params").at(name).get<std::int64_t>());
      for (const std::string& name : r.columns) out.values.push_back(row.at("values").at(name).get<std::string>());
      r.rows.push_back(std::move(out));
    }
    r.summary = j.at("summary").get<std::vector<std::string>>();
    return r;
  });
}

Json to_json(const CaseReport& r) {
  Json j;
  j["subject"] = r.subject;
  Json inv = Json::object();
  for (const auto& [k, v] : r.invariants) inv[k] = v;
  j["invariants"] = std::move(inv);
  Json verdicts = Json::object();
  for (const auto& [k, v] : r.verdicts) verdicts[k] = to_json(v);
  j["verdicts"] = std::move(verdicts);
  j["notes"] = r.notes;
  return j;
}

CaseReport case_from_json(const Json& j) {
  return guarded("case report", [&] {
    CaseReport r;
    r.subject = j.at("subject").get<std::string>();
    for (const auto& [k, v] : j.at("invariants").items()) r.invariants.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : j.at("verdicts").items()) r.verdicts.emplace_back(k, verdict_from_json(v));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

std::string render(const ScanReport& r, Format f) {
  if (f == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  std::vector<std::string> header = r.parameters;
  header.insert(header.end(), r.columns.begin(), r.columns.end());
  std::vector<std::vector<std::string>> cells;
  for (const ScanRow& row : r.rows) {
    std::vector<std::string> line;
    for (auto p : row.params) line.push_back(std::to_string(p));
    line.insert(line.end(), row.values.begin(), row.values.end());
    cells.push_back(std::move(line));
  }
  if (f == Format::Csv) {
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_field(line[i]);
      out << "\n";
    };
    emit(header);
    for (const auto& line : cells) emit(line);
    return out.str();
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) text += (i ? "  " : "") + pad(line[i], i < width.size() ? width[i] : 0);
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  };
  out << "# " << r.name << "\n";
  emit(header);
  for (const auto& line : cells) emit(line);
  if (!r.summary.empty()) {
    out << "\nsummary:\n";
    for (const auto& s : r.summary) out << "  - " << s << "\n";
  }
  if (!r.provenance.empty()) {
    out << "\ncolumns:\n";
    for (const auto& p : r.provenance) out << "  " << p.column << ": " << p.operation << " - " << p.description << "\n";
  }
  return out.str();
}

std::string render(const CaseReport& r, Format f) {
  if (f == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  if (f == Format::Csv) {
    out << "section,key,value\n";
    for (const auto& [k, v] : r.invariants) out << "invariant," << csv_field(k) << "," << csv_field(v) << "\n";
    for (const auto& [k, v] : r.verdicts) {
      out << "verdict," << csv_field(k) << "," << csv_field(v.label()) << "\n";
      if (v.witness) out << "witness," << csv_field(k) << "," << csv_field(witness_text(*v.witness)) << "\n";
    }
    for (const auto& n : r.notes) out << "note,," << csv_field(n) << "\n";
    return out.str();
  }
  out << r.subject << "\n";
  if (!r.invariants.empty()) {
    std::size_t w = 0;
    for (const auto& kv : r.invariants) w = std::max(w, kv.first.size());
    out << "\ninvariants:\n";
    for (const auto& [k, v] : r.invariants) out << "  " << pad(k, w) << "  " << v << "\n";
  }
  if (!r.verdicts.empty()) {
    out << "\nverdicts:\n";
    for (const auto& [k, v] : r.verdicts) {
      out << "  " << k << ": " << v.label() << (v.generic ? "  [generic statement]" : "") << "\n";
      if (v.witness) out << "      witness: " << witness_text(*v.witness) << "\n";
      if (!v.hypothesis.empty()) out << "      hypothesis: " << v.hypothesis << "\n";
      for (const auto& n : v.notes) out << "      note: " << n << "\n";
    }
  }
  if (!r.notes.empty()) {
    out << "\nnotes:\n";
    for (const auto& n : r.notes) out << "  - " << n << "\n";
  }
  return out.str();
}

}  // namespace ulrichnorm::report
