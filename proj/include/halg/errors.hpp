#pragma once

#include <stdexcept>
#include <string>

namespace halg {

// Base for every error raised by the library. `kind()` is the stable name
// reported by the CLI in its {"error": ...} object; `path()` locates the
// offending input field when the error came out of a parser.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
  const std::string& path() const noexcept { return path_; }
  void set_path(std::string p) {
    if (path_.empty()) path_ = std::move(p);
  }

 private:
  std::string path_;
};

#define HALG_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }   \
  };

HALG_DEFINE_ERROR(DivisibilityError)
HALG_DEFINE_ERROR(InvalidRing)
HALG_DEFINE_ERROR(ShapeError)
HALG_DEFINE_ERROR(NotAComplex)
HALG_DEFINE_ERROR(IndexError)
HALG_DEFINE_ERROR(DomainError)
HALG_DEFINE_ERROR(RingError)
HALG_DEFINE_ERROR(SquareError)
HALG_DEFINE_ERROR(ClassError)
HALG_DEFINE_ERROR(NotSimplicial)

#undef HALG_DEFINE_ERROR

// Malformed input: carries the JSON path of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what) : Error(what) { set_path(std::move(path)); }
  const char* kind() const noexcept override { return "SchemaError"; }
};

}  // namespace halg
