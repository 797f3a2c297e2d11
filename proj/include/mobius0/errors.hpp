#pragma once

#include <stdexcept>
#include <string>

namespace mobius0 {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A word is not an element of the monoid it was handed to (for example a
  // word lying in the ideal of a Rees quotient).
  class MembershipError : public Error {
   public:
    using Error::Error;
  };

  // An ill-formed monoid or ideal description, or an ideal kind that does not
  // make sense over the chosen base.
  class SpecError : public Error {
   public:
    using Error::Error;
  };

  // A coefficient above the truncation order was requested or supplied.
  class TruncationError : public Error {
   public:
    using Error::Error;
  };

  // The star operation or an inverse was requested for a series with the
  // wrong constant term.
  class ProperError : public Error {
   public:
    using Error::Error;
  };

  class MonoidMismatchError : public Error {
   public:
    using Error::Error;
  };

  class ContextMismatchError : public Error {
   public:
    using Error::Error;
  };

  // Thrown by realizations that cannot enumerate a grade.
  class InfiniteGradeError : public Error {
   public:
    using Error::Error;
  };

}  // namespace mobius0
