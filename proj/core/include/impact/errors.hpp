// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace impact {

/// A caller violated an operation precondition (bad dimensions, bad range, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// File bytes do not match the declared container format.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The container format is recognized but an encoding inside it is not handled.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The operating system refused a read or write.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace impact
