#pragma once

#include <stdexcept>
#include <string>

namespace pirel {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two values built in different precision contexts were combined.
class PrecisionMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Quadratic-field elements with different radicands were combined.
class MixedSurdError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Catalog document failed to parse, validate, or match its checksum.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series whose convergence rate is not below one, or whose tail
/// could not be certified within the iteration cap.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear system singular to working precision.
class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// PSLQ ran out of precision before deciding.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure inside the discovery pipeline; `stage()` names the step.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace pirel
