#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace burau {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonUnitDeterminant : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class StrandMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail);

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

class DepthTooSmall : public Error {
public:
    using Error::Error;
};

class KernelViolation : public Error {
public:
    using Error::Error;
};

class DepthViolation : public Error {
public:
    using Error::Error;
};

class HalfIntegralityViolation : public Error {
public:
    using Error::Error;
};

class SpanFailure : public Error {
public:
    SpanFailure(int degree, const std::string& detail)
        : Error("witness span failure in degree " + std::to_string(degree) + ": " + detail), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

class NoSolution : public Error {
public:
    using Error::Error;
};

class NotInGamma : public Error {
public:
    using Error::Error;
};

class DepthRegression : public Error {
public:
    using Error::Error;
};

}  // namespace burau
