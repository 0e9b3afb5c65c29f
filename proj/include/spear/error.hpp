#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spear {

enum class Errc {
  MalformedDataset,
  MissingAsset,
  IndexOutOfRange,
  UnparseableResponse,
  MissingDistraction,
  NoMaskCandidates,
  GoldTooLarge,
  TooShortToShuffle,
  GeneratorUnavailable,
  MissingResult,
  PoolTooSmall,
  EndpointUnreachable,
  LogCorrupt,
  ScriptMiss,
  IncompleteLog,
  ZeroBaseline,
  MisalignedSequences,
  InsufficientAgents,
  BackendFailure,
  MissingExpert,
  MissingInput,
  ConfigError,
  IoError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  Errc code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace spear
