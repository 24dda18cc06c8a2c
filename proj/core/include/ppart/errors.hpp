#pragma once

#include <stdexcept>
#include <string>

namespace ppart {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PPART_DEFINE_ERROR(Name)      \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

PPART_DEFINE_ERROR(CycleError);
PPART_DEFINE_ERROR(LabelError);
PPART_DEFINE_ERROR(ImproperLabeling);
PPART_DEFINE_ERROR(LabelClash);
PPART_DEFINE_ERROR(ShapeError);
PPART_DEFINE_ERROR(DuplicateLetters);
PPART_DEFINE_ERROR(DuplicateArgument);
PPART_DEFINE_ERROR(ZeroPolynomial);
PPART_DEFINE_ERROR(BudgetExceeded);
PPART_DEFINE_ERROR(InvalidAssignment);
PPART_DEFINE_ERROR(MalformedWord);
PPART_DEFINE_ERROR(SizeLimit);
PPART_DEFINE_ERROR(NotNatural);
PPART_DEFINE_ERROR(FormatError);

#undef PPART_DEFINE_ERROR

}  // namespace ppart
