#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace revaff {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   Input    -> malformed or schema-violating data (CLI exit 2)
//   Domain   -> well-formed input outside an operation's domain (CLI exit 1)
//   Internal -> a verified invariant failed; indicates a bug (CLI exit 3)
enum class ErrorClass { Input, Domain, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), cls_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const { return cls_; }
  const std::string& kind() const { return kind_; }

private:
  ErrorClass cls_;
  std::string kind_;
};

[[noreturn]] inline void throw_input(const std::string& kind, const std::string& detail) {
  throw Error(ErrorClass::Input, kind, detail);
}

[[noreturn]] inline void throw_domain(const std::string& kind, const std::string& detail) {
  throw Error(ErrorClass::Domain, kind, detail);
}

[[noreturn]] inline void throw_internal(const std::string& detail) {
  throw Error(ErrorClass::Internal, "InternalInvariant", detail);
}

inline void require_internal(bool ok, const std::string& detail) {
  if (!ok) throw_internal(detail);
}

} // namespace revaff
