#pragma once

#include <stdexcept>
#include <string>

namespace propclass {

// Every failure the library raises carries one of these kinds. The CLI maps
// kinds to exit codes: ConfigError -> 1 (usage), everything else -> 2 (data);
// exceptions that are not propclass::Error are internal errors -> 3.
enum class ErrorKind {
  MalformedPrice,
  MalformedField,
  MalformedRow,
  EmptyDataset,
  EmptyTrainingSet,
  ClassTooSmall,
  InsufficientData,
  MissingFeature,
  AllZeroCounts,
  LengthMismatch,
  EmptyInput,
  EmptyMatrix,
  TestSetMismatch,
  MalformedModel,
  IoError,
  ConfigError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedPrice: return "MalformedPrice";
    case ErrorKind::MalformedField: return "MalformedField";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::EmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorKind::ClassTooSmall: return "ClassTooSmall";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::MissingFeature: return "MissingFeature";
    case ErrorKind::AllZeroCounts: return "AllZeroCounts";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::TestSetMismatch: return "TestSetMismatch";
    case ErrorKind::MalformedModel: return "MalformedModel";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace propclass
