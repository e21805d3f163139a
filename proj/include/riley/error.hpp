#pragma once

#include <stdexcept>
#include <string>

namespace riley {

// A mathematical identity that must hold by construction failed. Signals a
// sign-convention or arithmetic bug, never bad user input.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace riley
