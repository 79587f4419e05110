// Exception types raised by the gpq library.
//
// Every error that a caller is expected to branch on has its own type; the
// CLI maps them onto process exit codes.

#ifndef GPQ_ERROR_HPP_
#define GPQ_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpq {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define GPQ_DECLARE_ERROR(NAME)       \
  class NAME : public Error {         \
   public:                            \
    using Error::Error;               \
  };

  GPQ_DECLARE_ERROR(InvalidArgument)
  GPQ_DECLARE_ERROR(NegativeExponent)
  GPQ_DECLARE_ERROR(InvalidMove)
  GPQ_DECLARE_ERROR(DerivationDoesNotReduce)
  GPQ_DECLARE_ERROR(BadOrder)
  GPQ_DECLARE_ERROR(Unsupported)
  GPQ_DECLARE_ERROR(OracleMismatch)
  GPQ_DECLARE_ERROR(LimitExceeded)
  GPQ_DECLARE_ERROR(CombinatorialExplosion)
  GPQ_DECLARE_ERROR(Disconnected)
  GPQ_DECLARE_ERROR(NotNullHomotopic)
  GPQ_DECLARE_ERROR(NonPositiveRelator)
  GPQ_DECLARE_ERROR(NotSplit)
  GPQ_DECLARE_ERROR(DoesNotCloseUp)
  GPQ_DECLARE_ERROR(ArityMismatch)
  GPQ_DECLARE_ERROR(NotInImage)
  GPQ_DECLARE_ERROR(PreconditionFailed)

#undef GPQ_DECLARE_ERROR

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace gpq

#endif  // GPQ_ERROR_HPP_
