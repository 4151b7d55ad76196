#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alphaspec {

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument
{
public:
    explicit ParameterError(const std::string& message)
        : std::invalid_argument(message)
    {
    }

    ParameterError(const std::string& message, std::vector<std::string> violations)
        : std::invalid_argument(message), violations_(std::move(violations))
    {
    }

    /// Individually named side conditions, when the error came from validation.
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// The request is well formed but exceeds what the exact algorithm supports
/// (subset enumeration, exhaustive search).
class CapabilityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A closed form was evaluated outside the region where it is real.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An iterative numeric routine failed; carries the best estimate reached.
class NumericError : public std::runtime_error
{
public:
    NumericError(const std::string& message, double best_estimate)
        : std::runtime_error(message), best_estimate_(best_estimate)
    {
    }

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// Malformed graph6 input. `offset` is the byte position of the problem.
class DecodeError : public std::runtime_error
{
public:
    DecodeError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace alphaspec
