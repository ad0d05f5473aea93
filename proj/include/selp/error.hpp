#pragma once

#include <stdexcept>
#include <string>

namespace selp {

// Location of a token in an input text, 1-based. length counts characters.
struct SourceSpan {
    int line = 0;
    int column = 0;
    int length = 0;
};

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, SourceSpan where)
        : Error(format(msg, where)), span(where) {}
    SourceSpan span;

    static std::string format(const std::string& msg, SourceSpan s) {
        if (s.line <= 0) return msg;
        return msg + " (line " + std::to_string(s.line) + ", column " +
               std::to_string(s.column) + ")";
    }
};

struct BudgetError : Error {
    using Error::Error;
};

} // namespace selp
