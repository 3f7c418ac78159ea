#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locsep {

enum class ErrorKind {
    Config,          // invalid parameters or method/parameter combination
    Io,              // missing or unreadable file
    Parse,           // malformed edge list or cover file
    Precondition,    // operation called outside its domain
    UndefinedMetric, // e.g. modularity on a graph without edges
    Invariant,       // internal consistency check failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) throw Error(kind, what);
}

} // namespace locsep
