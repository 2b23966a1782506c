// Copyright 2026 The gaussent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gaussent {

enum class ErrorKind {
    InvalidArgument,
    InvalidCovariance,
    NumericalFailure,
    DegenerateState,
    UnsupportedConfiguration,
    IntegrationDiverged,
    ConfigError,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when the moment integrator produces a non-finite state.
class IntegrationDiverged : public Error {
public:
    IntegrationDiverged(double time, const std::string& what)
        : Error(ErrorKind::IntegrationDiverged, what + " at t=" + std::to_string(time)),
          time_(time) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

/// Raised for a bad run configuration; carries the offending field name.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error(ErrorKind::ConfigError, field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidCovariance: return "invalid-covariance";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::DegenerateState: return "degenerate-state";
    case ErrorKind::UnsupportedConfiguration: return "unsupported-configuration";
    case ErrorKind::IntegrationDiverged: return "integration-diverged";
    case ErrorKind::ConfigError: return "config-error";
    case ErrorKind::IoError: return "io-error";
    }
    return "unknown";
}

} // namespace gaussent
