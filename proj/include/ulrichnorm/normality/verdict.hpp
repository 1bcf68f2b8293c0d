#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ulrichnorm/exactalg/rational.hpp"

namespace ulrichnorm {

enum class Relation { Less, Equal, Greater };

/// "<", "=", ">".
std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);
Relation compare(const Rational& lhs, const Rational& rhs);

/// An evaluated inequality lhs (relation) rhs.
struct Witness {
  Rational lhs;
  Relation relation = Relation::Equal;
  Rational rhs;
  std::string description;

  static Witness of(Rational lhs, Rational rhs, std::string description);
  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class VerdictStatus { NotKNormal, NotStronglyKNormal, PositiveByTheorem, Inconclusive };

std::string to_string(VerdictStatus s);
VerdictStatus status_from_string(const std::string& s);

/// Outcome of one obstruction test or sufficient criterion.
///
/// Counting tests only ever produce NotKNormal / NotStronglyKNormal or
/// Inconclusive; PositiveByTheorem means a sufficient hypothesis fired and
/// `hypothesis` states it.
struct NormalityVerdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  int k = 0;
  std::string tag;
  std::string hypothesis;
  std::optional<Witness> witness;
  /// The conclusion concerns a general object, not every object.
  bool generic = false;
  std::vector<std::string> notes;

  [[nodiscard]] bool fired() const { return status != VerdictStatus::Inconclusive; }
  /// "NotKNormal(2)", "PositiveByTheorem(curve-degree)", "Inconclusive".
  [[nodiscard]] std::string label() const;
  friend bool operator==(const NormalityVerdict&, const NormalityVerdict&) = default;
};

NormalityVerdict positive(std::string tag, std::string hypothesis, std::optional<Witness> witness = std::nullopt);
NormalityVerdict inconclusive(std::string tag, std::optional<Witness> witness = std::nullopt);

}  // namespace ulrichnorm
