#pragma once

#include <stdexcept>
#include <string>

namespace pichar {

/// Malformed or out-of-contract caller input (bad generators, bad file, ...).
class InvalidInput : public std::runtime_error {
public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (enumeration cap, class cap, ...).
class ResourceLimit : public std::runtime_error {
public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// A mechanically checked statement failed on a concrete instance.
/// Carries the full diagnostic; any such failure indicates an engine bug.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency check failed (table bug, non-closed kernel, ...).
class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pichar
