#pragma once

#include <stdexcept>
#include <string>

namespace arh {

// Failure conditions that callers are expected to distinguish.  Everything
// else (broken internal invariants) uses plain std::logic_error via check().
enum class Errc {
  FieldTooSmall,
  DecompositionStuck,
  NotRepresentationFinite,
  EnumerationUnstable,
  InvalidPicket,
  TauUndefined,
  TauNotFound,
  TauAmbiguous,
  InternalMismatch,
  PreconditionViolated,
  NonIntegralMultiplicity,
  BadPath,
  BadElement,
  InvalidRange,
  InvalidGrid,
  NotAComplex,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::DecompositionStuck: return "DecompositionStuck";
    case Errc::NotRepresentationFinite: return "NotRepresentationFinite";
    case Errc::EnumerationUnstable: return "EnumerationUnstable";
    case Errc::InvalidPicket: return "InvalidPicket";
    case Errc::TauUndefined: return "TauUndefined";
    case Errc::TauNotFound: return "TauNotFound";
    case Errc::TauAmbiguous: return "TauAmbiguous";
    case Errc::InternalMismatch: return "InternalMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::BadPath: return "BadPath";
    case Errc::BadElement: return "BadElement";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

// Internal consistency check; a failure here is a bug, not a user error.
inline void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace arh
