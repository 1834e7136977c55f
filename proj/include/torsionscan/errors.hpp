#pragma once

#include <stdexcept>
#include <string>

namespace torsionscan {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad data handed to us: wrong dimension, malformed relation table, ...
struct input_error : error {
    using error::error;
};

// Point set is not full-dimensional (or an operation needs another dimension).
struct dimension_error : input_error {
    using input_error::input_error;
};

// Operation needs a reflexive polytope (or a lattice polar dual) and the
// input is not one.
struct reflexivity_error : input_error {
    using input_error::input_error;
};

// A relation table does not describe a valid mirror-family row.
struct relation_error : input_error {
    using input_error::input_error;
};

// Vertex-matrix stream could not be read; carries a 1-based position.
struct parse_error : input_error {
    parse_error(const std::string& what, long long line, long long column = 0)
        : input_error(format(what, line, column)), line(line), column(column)
    {
    }
    long long line;
    long long column;

private:
    static std::string format(const std::string& what, long long line, long long column)
    {
        std::string s = "parse error at line " + std::to_string(line);
        if (column > 0)
            s += ", column " + std::to_string(column);
        return s + ": " + what;
    }
};

// A theorem the code relies on failed on concrete data. This is never a
// user mistake; it means the library itself is inconsistent.
struct internal_error : error {
    using error::error;
};

} // namespace torsionscan
