#pragma once

#include <stdexcept>
#include <string>

namespace telescoped {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON, coefficient specs, ranges).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = npos)
        : Error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
          position_(position)
    {
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A documented precondition or invariant was violated. `invariant` names it.
class PreconditionError : public Error {
public:
    PreconditionError(std::string invariant, const std::string& detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant))
    {
    }

    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

class DimensionError : public PreconditionError {
public:
    explicit DimensionError(const std::string& detail) : PreconditionError("dimension mismatch", detail) {}
};

}  // namespace telescoped
