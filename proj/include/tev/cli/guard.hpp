#pragma once

#include <exception>
#include <ostream>

#include "tev/errors.hpp"

namespace tev::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitInvariantBreach = 3,
};

/// Runs body() and maps library exceptions onto process exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InvalidInput& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvariantBreach& ex) {
    err << "internal invariant breach: " << ex.what() << '\n';
    return kExitInvariantBreach;
  }
}

}  // namespace tev::cli
