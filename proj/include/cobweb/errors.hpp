#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define COBWEB_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  }

// Operation requires an acyclic digraph.
COBWEB_DEFINE_ERROR(CyclicInput);
// Chain and digraph (or two chains) disagree on the vertex set.
COBWEB_DEFINE_ERROR(VertexSetMismatch);
// Chain is not a linear extension of the digraph's order.
COBWEB_DEFINE_ERROR(NotLinearExtension);
// Level sequence produced a size < 1.
COBWEB_DEFINE_ERROR(NonPositiveSize);
// Explicit level sequence queried past its end.
COBWEB_DEFINE_ERROR(IndexOutOfRange);
// Instance exceeds a hard size guard.
COBWEB_DEFINE_ERROR(TooLarge);
// Malformed text input (edge lists, JSON, sequence specs).
COBWEB_DEFINE_ERROR(ParseError);
// Structurally invalid graph or relation (loops, unknown endpoints, ...).
COBWEB_DEFINE_ERROR(InvalidInput);

#undef COBWEB_DEFINE_ERROR

}  // namespace cobweb
