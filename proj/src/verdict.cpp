#include "ulrichnorm/normality/verdict.hpp"

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Relation relation_from_string(const std::string& s) {
  if (s == "<") return Relation::Less;
  if (s == "=") return Relation::Equal;
  if (s == ">") return Relation::Greater;
  throw InputError("unknown relation '" + s + "'");
}

Relation compare(const Rational& lhs, const Rational& rhs) {
  if (lhs < rhs) return Relation::Less;
  if (lhs > rhs) return Relation::Greater;
  return Relation::Equal;
}

Witness Witness::of(Rational lhs, Rational rhs, std::string description) {
  const Relation rel = compare(lhs, rhs);
  return Witness{std::move(lhs), rel, std::move(rhs), std::move(description)};
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::NotKNormal: return "NotKNormal";
    case VerdictStatus::NotStronglyKNormal: return "NotStronglyKNormal";
    case VerdictStatus::PositiveByTheorem: return "PositiveByTheorem";
    case VerdictStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

VerdictStatus status_from_string(const std::string& s) {
  if (s == "NotKNormal") return VerdictStatus::NotKNormal;
  if (s == "NotStronglyKNormal") return VerdictStatus::NotStronglyKNormal;
  if (s == "PositiveByTheorem") return VerdictStatus::PositiveByTheorem;
  if (s == "Inconclusive") return VerdictStatus::Inconclusive;
  throw InputError("unknown verdict status '" + s + "'");
}

std::string NormalityVerdict::label() const {
  switch (status) {
    case VerdictStatus::NotKNormal:
    case VerdictStatus::NotStronglyKNormal: return to_string(status) + "(" + std::to_string(k) + ")";
    case VerdictStatus::PositiveByTheorem: return to_string(status) + "(" + tag + ")";
    case VerdictStatus::Inconclusive: return to_string(status);
  }
  return "?";
}

NormalityVerdict positive(std::string tag, std::string hypothesis, std::optional<Witness> witness) {
  NormalityVerdict v;
  v.status = VerdictStatus::PositiveByTheorem;
  v.tag = std::move(tag);
  v.hypothesis = std::move(hypothesis);
  v.witness = std::move(witness);
  return v;
}

NormalityVerdict inconclusive(std::string tag, std::optional<Witness> witness) {
  NormalityVerdict v;
  v.tag = std::move(tag);
  v.witness = std::move(witness);
  return v;
}

}  // namespace ulrichnorm
