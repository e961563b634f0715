#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed ring spec or element literal; position is a byte offset into
// the input text.
class parse_error : public error {
  public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Search space larger than the configured SearchBudget.
class budget_error : public error {
  public:
    using error::error;
};

// Operands belong to different rings.
class ring_mismatch_error : public error {
  public:
    using error::error;
};

} // namespace ringlab
