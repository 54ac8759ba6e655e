#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z4z2 {

enum class Errc {
  MalformedGraph6,
  NotCubic,
  Disconnected,
  NotSimple,
  NotAMatching,
  SelfLoopCreated,
  MultiEdgeCreated,
  NoPerfectMatching,
  NotPerfectMatching,
  MalformedStructure,
  WrongVertexCount,
  NotProper3Coloring,
  NotThreeEven,
  InvalidColoring,
  NotPerfectOnEven,
  NormalizationFailed,
  NotAnMPath,
  ClaimViolated,
  BudgetExhausted,
  BadParameter,
  MalformedCertificate,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::NotCubic: return "NotCubic";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::SelfLoopCreated: return "SelfLoopCreated";
    case Errc::MultiEdgeCreated: return "MultiEdgeCreated";
    case Errc::NoPerfectMatching: return "NoPerfectMatching";
    case Errc::NotPerfectMatching: return "NotPerfectMatching";
    case Errc::MalformedStructure: return "MalformedStructure";
    case Errc::WrongVertexCount: return "WrongVertexCount";
    case Errc::NotProper3Coloring: return "NotProper3Coloring";
    case Errc::NotThreeEven: return "NotThreeEven";
    case Errc::InvalidColoring: return "InvalidColoring";
    case Errc::NotPerfectOnEven: return "NotPerfectOnEven";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::NotAnMPath: return "NotAnMPath";
    case Errc::ClaimViolated: return "ClaimViolated";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::BadParameter: return "BadParameter";
    case Errc::MalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

/// Library-wide exception. The code identifies the failure class; the
/// message carries instance detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when a step of the matching correction fails its runtime check.
/// `claim()` names the check ("D", "E", ..., "J").
class ClaimViolation : public Error {
 public:
  ClaimViolation(std::string claim, const std::string& what)
      : Error(Errc::ClaimViolated, "claim " + claim + ": " + what), claim_(std::move(claim)) {}

  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

}  // namespace z4z2
