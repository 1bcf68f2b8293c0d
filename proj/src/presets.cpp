#include "ulrichnorm/report/presets.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ulrichnorm/error.hpp"

#ifndef ULRICHNORM_DEFAULT_PRESETS
#define ULRICHNORM_DEFAULT_PRESETS "data/presets.txt"
#endif

namespace ulrichnorm::report {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::string& Preset::get(const std::string& key) const {
  auto it = fields.find(key);
  if (it == fields.end()) throw InputError("preset '" + name + "' has no key '" + key + "'");
  return it->second;
}

int Preset::get_int(const std::string& key) const {
  const Rational q = get_rational(key);
  if (!q.is_integer()) throw InputError("preset '" + name + "': " + key + " must be an integer");
  return static_cast<int>(q.to_int64());
}

Rational Preset::get_rational(const std::string& key) const { return Rational::parse(get(key)); }

VarietyModel Preset::model() const {
  const std::string k = kind();
  if (k == "p3-hypersurface") return VarietyModel::hypersurface_p3(get_int("degree"));
  if (k == "p4-hypersurface") return VarietyModel::hypersurface_p4(get_int("degree"));
  if (k == "ci-2a") return VarietyModel::complete_intersection_2a(get_int("a"));
  if (k == "curve") return VarietyModel::curve(get_int("genus"), get_int("degree"));
  if (k == "surface") {
    const int q = fields.count("q") ? get_int("q") : 0;
    return VarietyModel::surface(ClassRing::surface_hk(get_rational("h2"), get_rational("hk"), get_rational("k2")),
                                 get_rational("chi"), q);
  }
  throw InputError("preset '" + name + "' has unknown kind '" + k + "'");
}

PresetBook PresetBook::parse(const std::string& text) {
  PresetBook book;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3) throw InputError("presets line " + std::to_string(lineno) + ": bad header");
      const std::string name = trim(t.substr(1, t.size() - 2));
      for (const Preset& p : book.presets_) {
        if (p.name == name) throw InputError("duplicate preset '" + name + "'");
      }
      book.presets_.push_back(Preset{name, {}});
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InputError("presets line " + std::to_string(lineno) + ": expected key = value");
    if (book.presets_.empty()) {
      throw InputError("presets line " + std::to_string(lineno) + ": key outside of a [section]");
    }
    book.presets_.back().fields[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return book;
}

PresetBook PresetBook::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presets file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

PresetBook PresetBook::defaults() {
  const char* env = std::getenv("ULRICHNORM_PRESETS");
  return load(env && *env ? env : ULRICHNORM_DEFAULT_PRESETS);
}

const Preset& PresetBook::get(const std::string& name) const {
  for (const Preset& p : presets_) {
    if (p.name == name) return p;
  }
  throw InputError("unknown preset '" + name + "'");
}

std::vector<std::string> PresetBook::names() const {
  std::vector<std::string> out;
  for (const Preset& p : presets_) out.push_back(p.name);
  return out;
}

}  // namespace ulrichnorm::report
