#include "yetter/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace yetter {
namespace {

template <typename T>
void override_from_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  T parsed{};
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, parsed);
  if (ec != std::errc{} || ptr != end || parsed <= 0) {
    throw std::invalid_argument(std::string("invalid value for ") + name + ": " + raw);
  }
  value = parsed;
}

}  // namespace

Limits Limits::from_env() {
  Limits out;
  override_from_env("CYCLO_CONDUCTOR_CAP", out.conductor_cap);
  override_from_env("SYMMETRIZER_DIM_CAP", out.symmetrizer_dim_cap);
  return out;
}

const Limits& limits() {
  static const Limits instance = Limits::from_env();
  return instance;
}

}  // namespace yetter
