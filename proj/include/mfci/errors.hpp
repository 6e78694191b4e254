#pragma once

#include <stdexcept>
#include <string>

namespace mfci {

// Base of every error thrown by the library. kind() is a stable tag used by
// the CLI to map errors to exit codes and report fields.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define MFCI_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  };

MFCI_DEFINE_ERROR(InhomogeneousInput)
MFCI_DEFINE_ERROR(NotInImage)
MFCI_DEFINE_ERROR(BudgetExceeded)
MFCI_DEFINE_ERROR(NonTermination)
MFCI_DEFINE_ERROR(WindowTooSmall)
MFCI_DEFINE_ERROR(NotNullhomotopic)
MFCI_DEFINE_ERROR(LiftObstruction)
MFCI_DEFINE_ERROR(NotAnRModule)
MFCI_DEFINE_ERROR(MFEquationFailure)
MFCI_DEFINE_ERROR(RingMismatch)
MFCI_DEFINE_ERROR(VerificationFailure)
MFCI_DEFINE_ERROR(NonRegularContext)
MFCI_DEFINE_ERROR(DecompositionFailure)
MFCI_DEFINE_ERROR(IdentificationFailure)
MFCI_DEFINE_ERROR(NegativeDegreeUnsupported)
MFCI_DEFINE_ERROR(RouteMismatch)
MFCI_DEFINE_ERROR(UnknownFixture)
MFCI_DEFINE_ERROR(FieldMismatch)
MFCI_DEFINE_ERROR(DimensionMismatch)

#undef MFCI_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("ParseError", msg + " at line " + std::to_string(line) +
                                ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace mfci
