#pragma once

#include <stdexcept>
#include <string>

namespace apx {

/// Base class for every error raised by the toolkit. `kind()` is a stable
/// machine-readable tag used by the CLI and in reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept = 0;
};

#define APX_DEFINE_ERROR(Name)                                        \
  class Name final : public Error {                                   \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  }

APX_DEFINE_ERROR(InvalidArgument);
APX_DEFINE_ERROR(EmptySet);
APX_DEFINE_ERROR(HalvingUnavailable);
APX_DEFINE_ERROR(InvalidConnectionSet);
APX_DEFINE_ERROR(ConsistencyError);
APX_DEFINE_ERROR(SymmetryRequired);
APX_DEFINE_ERROR(NoNonzeroFrequency);
APX_DEFINE_ERROR(MuUndefined);
APX_DEFINE_ERROR(OutOfScalingRange);
APX_DEFINE_ERROR(OddOrderRequired);

#undef APX_DEFINE_ERROR

}  // namespace apx
