#pragma once

#include <string>
#include <utility>

namespace oddakh {

/// Outcome of an identity check. Records only the first violation.
struct CheckReport {
  bool ok = true;
  std::string failure;

  void fail(std::string what) {
    if (ok) {
      ok = false;
      failure = std::move(what);
    }
  }
  void merge(const CheckReport& other, const std::string& context = {}) {
    if (!other.ok) fail(context.empty() ? other.failure : context + ": " + other.failure);
  }
  explicit operator bool() const { return ok; }
};

}  // namespace oddakh
