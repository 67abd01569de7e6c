#include "nij/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace nij {
namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string_view, uint32_t> ids;

  Registry() {
    names.emplace_back("");
    ids.emplace(names.back(), 0);
  }
};

Registry& registry() {
  static Registry* r = new Registry();
  return *r;
}

}  // namespace

Symbol Symbol::intern(std::string_view name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it != r.ids.end()) return Symbol(it->second);
  r.names.emplace_back(name);
  uint32_t id = static_cast<uint32_t>(r.names.size() - 1);
  r.ids.emplace(r.names.back(), id);
  return Symbol(id);
}

std::optional<Symbol> Symbol::lookup(std::string_view name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.ids.find(name);
  if (it == r.ids.end()) return std::nullopt;
  return Symbol(it->second);
}

const std::string& Symbol::name() const {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names[id_];
}

}  // namespace nij
