#pragma once

#include <stdexcept>
#include <string>

namespace tac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// rank or dimension mismatch between objects that must be composable
struct ShapeError : Error {
    using Error::Error;
};

// objects defined over incompatible rings, or a ring outside the supported classes
struct RingError : Error {
    using Error::Error;
};

// a lift or extension step had no solution
struct SolveError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0;
    int col = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

}  // namespace tac
