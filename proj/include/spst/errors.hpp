#ifndef SPST_ERRORS_HPP
#define SPST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spst {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pad(nu, t) requires t >= nu_1 + |nu|.
struct PadTooSmallError : Error {
    using Error::Error;
};

// A computation that is contractually integral produced a non-integer.
struct NonIntegralError : Error {
    using Error::Error;
};

// decompose() was handed a class function with negative or fractional
// multiplicities.
struct NotACharacterError : Error {
    using Error::Error;
};

// The finite-t oracle ran past the supported symmetric-group size without
// seeing two consecutive equal values.
struct OracleBudgetError : Error {
    using Error::Error;
};

// Cache file present but unreadable (bad magic, checksum, or body).
struct CorruptCacheError : Error {
    using Error::Error;
};

// Filesystem failure while writing a cache entry.
struct IoError : Error {
    using Error::Error;
};

// Expression-language syntax error. Carries the byte offset where parsing
// stopped and what was expected there.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;
    ParseError(std::size_t offset, const std::string& expected)
        : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset(offset),
          expected(expected) {}
};

// Module error re-thrown by the evaluator with the source span attached.
struct EvalError : Error {
    std::size_t begin;
    std::size_t end;
    EvalError(std::size_t begin, std::size_t end, const std::string& what)
        : Error("eval error in expression span [" + std::to_string(begin) + "," +
                std::to_string(end) + "): " + what),
          begin(begin),
          end(end) {}
};

}  // namespace spst

#endif
