#pragma once

#include <stdexcept>
#include <string>

namespace auvform {

/// Invalid or inconsistent configuration (bad file, bad field, singular
/// coefficient set). Carries the offending key/path in the message.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite state or divergence inside the simulation loop.
class SimulationFault : public std::runtime_error {
public:
  explicit SimulationFault(const std::string& msg) : std::runtime_error(msg) {}
};

/// Scenario generation could not satisfy placement constraints.
class ScenarioError : public std::runtime_error {
public:
  explicit ScenarioError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Corrupt, truncated, or tampered serialized payload.
class IntegrityError : public std::runtime_error {
public:
  explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Serialized payload has a version this build does not understand.
class VersionError : public std::runtime_error {
public:
  explicit VersionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Vector widths disagree (checkpoint vs scenario, input vs layer, ...).
class DimensionError : public std::runtime_error {
public:
  explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace auvform
