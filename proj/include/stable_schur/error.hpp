#pragma once

#include <stdexcept>
#include <string>

namespace stable_schur {

// Raised for inadmissible labels, family mismatches and malformed input.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the engine when a colimit computation fails its stabilization re-check.
class StabilizationError : public std::runtime_error {
public:
    explicit StabilizationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stable_schur
