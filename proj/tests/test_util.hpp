#pragma once

#include <optional>
#include <utility>

#include "ostk/error.hpp"

// Runs f and reports the library error code it threw, if any.  Lets tests
// assert on the code without coupling to message text.
template <typename F>
std::optional<ostk::Errc> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const ostk::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
