#pragma once

#include <stdexcept>
#include <string>

namespace nimforge {

enum class ErrorKind {
  BadInput,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderTooLarge,
  FactorTooSmall,
  NotASubgroup,
  NotAbelian,
  NotASquare,
  OrderNotSquare,
  BadP,
  OddOrder,
  DimensionMismatch,
  NotHomomorphism,
  NotRigid,
  UnitNotIdentity,
  InvertibleNotPermutation,
  NegativeEntry,
  IndexOutOfRange,
  ConditionViolated,
  BudgetExceeded,
  EntryBoundTooSmall,
  UnknownEntry,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nimforge
