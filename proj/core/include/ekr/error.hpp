#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

enum class ErrorKind {
  kInvalidInput,   // unsupported q, malformed file, bad flag
  kDomain,         // inverse/log of zero and similar
  kBudget,         // size or time budget exceeded
  kVerification,   // a claimed property did not re-verify
  kNumeric,        // tolerance violated in a floating computation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ekr
