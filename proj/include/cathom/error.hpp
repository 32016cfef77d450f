#pragma once

#include <stdexcept>
#include <string>

namespace cathom {

/// Library-wide error carrying a machine-readable kind tag
/// ("MissingComposite", "CapExceeded", ...) next to the human message.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace cathom
