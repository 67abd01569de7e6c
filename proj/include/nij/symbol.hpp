#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nij {

// Interned symbol name. Ids are process-global and stable; symbols are
// freely shareable between threads.
class Symbol {
 public:
  static Symbol intern(std::string_view name);
  static std::optional<Symbol> lookup(std::string_view name);

  Symbol() : id_(0) {}  // the reserved symbol "" (never used in expressions)

  uint32_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

 private:
  explicit Symbol(uint32_t id) : id_(id) {}
  uint32_t id_;
};

}  // namespace nij
