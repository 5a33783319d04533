#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition.
class InvalidParameter : public Error
{
  public:
    using Error::Error;
};

/// The requested state is not normalizable or no energy root exists.
class NoBoundState : public Error
{
  public:
    using Error::Error;
};

/// An iterative procedure ran out of iterations or overflowed.
class NonConvergence : public Error
{
  public:
    using Error::Error;
};

/// The radial grid cannot resolve the requested number of levels.
class GridTooCoarse : public Error
{
  public:
    using Error::Error;
};

/// Malformed input file.
class ParseError : public Error
{
  public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace hgm
