#pragma once

#include <stdexcept>
#include <string>

namespace specbid {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent scenario configuration. Carries a line number when
// the problem can be traced to a specific line of a config document
// (line == 0 means the error is cross-field and has no single source line).
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line = 0;
};

// Filesystem problem while writing results.
struct IoError : Error {
    explicit IoError(const std::string& msg, std::string p)
        : Error(msg + ": " + p), path(std::move(p)) {}
    std::string path;
};

}  // namespace specbid
