#pragma once

#include <map>
#include <string>
#include <vector>

#include "ulrichnorm/rr/variety.hpp"

namespace ulrichnorm::report {

/// One named section of the presets file.
struct Preset {
  std::string name;
  std::map<std::string, std::string> fields;

  /// Throws InputError when the key is missing.
  [[nodiscard]] const std::string& get(const std::string& key) const;
  [[nodiscard]] int get_int(const std::string& key) const;
  [[nodiscard]] Rational get_rational(const std::string& key) const;
  [[nodiscard]] std::string kind() const { return get("kind"); }
  [[nodiscard]] VarietyModel model() const;
};

/// Plain-text key/value presets: `[name]` section headers, `key = value`
/// lines, `#` comments.
class PresetBook {
 public:
  static PresetBook parse(const std::string& text);
  static PresetBook load(const std::string& path);
  /// $ULRICHNORM_PRESETS if set, else the file shipped with the sources.
  static PresetBook defaults();

  [[nodiscard]] const Preset& get(const std::string& name) const;
  [[nodiscard]] std::vector<std::string> names() const;

 private:
  std::vector<Preset> presets_;
};

}  // namespace ulrichnorm::report
