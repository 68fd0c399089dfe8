#pragma once

#include <stdexcept>
#include <string>

namespace janus {

enum class ErrorCode {
  MalformedXml,
  NotASchema,
  EmptyLabel,
  LexiconParse,
  InvalidConfig,
  InvalidIri,
  RoleConflict,
  UnclassifiedConcept,
  UnsupportedVersion,
  CorruptStore,
  EmptyCorpus,
  IoError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::NotASchema: return "NotASchema";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::LexiconParse: return "LexiconParse";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::RoleConflict: return "RoleConflict";
    case ErrorCode::UnclassifiedConcept: return "UnclassifiedConcept";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::CorruptStore: return "CorruptStore";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

/// Fatal error raised by core operations. Non-fatal findings travel as
/// warnings inside the artifacts instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace janus
