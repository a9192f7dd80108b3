#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hcflink {

/// Input outside the mathematical domain of an operation (negative loss,
/// zero-length link, non-finite dB value, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A solve could not be bracketed or did not converge. Carries the objective
/// value at both ends of the search interval for diagnostics.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, double low_value, double high_value)
        : std::runtime_error(what), low_value_(low_value), high_value_(high_value) {}

    double low_value() const noexcept { return low_value_; }
    double high_value() const noexcept { return high_value_; }

private:
    double low_value_;
    double high_value_;
};

/// Malformed numeric data (NaN grid cells, unsorted tables).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& what, std::string path)
        : std::runtime_error(what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace hcflink
