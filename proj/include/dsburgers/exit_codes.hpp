#pragma once

#include "dsburgers/errors.hpp"

namespace dsburgers {

/// Process exit status of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitMalformedConfig = 3,
  kExitUnknownKey = 4,
  kExitInvalidValue = 5,
  kExitDomain = 6,
  kExitInstability = 7,
  kExitIo = 8,
};

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Config:
      switch (static_cast<const ConfigError&>(e).code()) {
        case ConfigErrc::Usage: return kExitUsage;
        case ConfigErrc::MalformedFile: return kExitMalformedConfig;
        case ConfigErrc::UnknownKey: return kExitUnknownKey;
        case ConfigErrc::Invalid: return kExitInvalidValue;
      }
      return kExitUsage;
    case ErrorKind::Domain: return kExitDomain;
    case ErrorKind::Instability: return kExitInstability;
    case ErrorKind::Io: return kExitIo;
  }
  return 1;
}

}  // namespace dsburgers
