#pragma once

#include <stdexcept>
#include <string>

namespace zzag {

// Domain-level failure (bad input, inapplicable operation, ...). CLI maps
// these to exit code 1, usage problems to exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : DomainError {
    explicit FieldMismatch(const std::string& what) : DomainError(what) {}
};

struct NotApplicable : DomainError {
    explicit NotApplicable(const std::string& what) : DomainError(what) {}
};

struct NotAnAutomorphism : DomainError {
    explicit NotAnAutomorphism(const std::string& what) : DomainError(what) {}
};

struct OracleInconsistency : DomainError {
    explicit OracleInconsistency(const std::string& what) : DomainError(what) {}
};

} // namespace zzag
