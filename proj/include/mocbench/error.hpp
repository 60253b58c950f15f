#pragma once

#include <stdexcept>
#include <string>

namespace mocbench {

// All library errors funnel through this type so the CLI can map them to
// exit codes and message prefixes without a taxonomy of exception classes.
class Error : public std::runtime_error {
public:
  enum class Kind {
    Shape,     // arity / alphabet / bundle mismatches
    Parse,     // malformed machine files, decode failures
    Domain,    // contract violations detected at run time
    Resource,  // instance too large for the configured budget
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

  const char* prefix() const {
    switch (kind_) {
      case Kind::Shape: return "shape error";
      case Kind::Parse: return "parse error";
      case Kind::Domain: return "domain error";
      case Kind::Resource: return "resource error";
    }
    return "error";
  }

private:
  Kind kind_;
};

[[noreturn]] inline void throw_shape(const std::string& msg) { throw Error(Error::Kind::Shape, msg); }
[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(Error::Kind::Parse, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(Error::Kind::Domain, msg); }
[[noreturn]] inline void throw_resource(const std::string& msg) { throw Error(Error::Kind::Resource, msg); }

}  // namespace mocbench
