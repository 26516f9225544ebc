#pragma once

#include <stdexcept>
#include <string>

namespace nld {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Two fields (or a field and a table) live on different grids.
class GridMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedMode : public Error {
public:
    using Error::Error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

/// |omega| >= m: the linearized tail does not decay.
class NonLocalizable : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

class NoSolutionFound : public Error {
public:
    using Error::Error;
};

/// Non-finite values appeared during time evolution.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, double last_good_time)
        : Error(what), last_good_time_(last_good_time) {}

    double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace nld
