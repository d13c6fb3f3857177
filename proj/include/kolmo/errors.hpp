#pragma once

#include <stdexcept>
#include <string>

namespace kolmo {

// Base for all domain errors raised by the library. The CLI maps them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KOLMO_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

KOLMO_DEFINE_ERROR(InvalidParams);
KOLMO_DEFINE_ERROR(NonZeroMean);
KOLMO_DEFINE_ERROR(InfeasibleNorms);
KOLMO_DEFINE_ERROR(InvalidOrderVector);
KOLMO_DEFINE_ERROR(OrderTooHigh);
KOLMO_DEFINE_ERROR(BadOrders);
KOLMO_DEFINE_ERROR(HypothesisViolated);
KOLMO_DEFINE_ERROR(EmptyClass);
KOLMO_DEFINE_ERROR(UnsupportedSpec);
KOLMO_DEFINE_ERROR(PowerLawMismatch);

#undef KOLMO_DEFINE_ERROR

}  // namespace kolmo
