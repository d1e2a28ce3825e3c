#pragma once

#include <stdexcept>
#include <string>

namespace fracsis {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositiveParameter : public Error {
public:
    using Error::Error;
};

class ViolatedAdmissibility : public Error {
public:
    using Error::Error;
};

class DegenerateRate : public Error {
public:
    using Error::Error;
};

class StepTooLarge : public Error {
public:
    using Error::Error;
};

class OrderOutOfRange : public Error {
public:
    using Error::Error;
};

class BadDimensions : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidExitCost : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class HistoryMissing : public Error {
public:
    using Error::Error;
};

// Raised when the explicit march produces non-finite or absurdly large
// values; step_index is the time level whose computation overflowed.
class NumericalBlowup : public Error {
public:
    NumericalBlowup(const std::string& what, int step_index)
        : Error(what), step_index(step_index) {}
    int step_index;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace fracsis
