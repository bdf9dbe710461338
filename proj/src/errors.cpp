#include "burau/errors.hpp"

namespace burau {

namespace {

std::string parse_message(std::size_t position, const std::vector<std::string>& expected, const std::string& detail)
{
    std::string msg = "parse error at position " + std::to_string(position) + ": " + detail;
    if (!expected.empty()) {
        msg += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            msg += (i ? ", " : "") + expected[i];
        msg += ")";
    }
    return msg;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail)
    : Error(parse_message(position, expected, detail)), position_(position), expected_(std::move(expected))
{
}

}  // namespace burau
