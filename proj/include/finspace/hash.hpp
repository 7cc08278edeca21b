#pragma once

#include <cstdint>
#include <string_view>

namespace finspace {

/// 64-bit FNV-1a, used for stable fingerprints and input digests.
class Fnv1a {
 public:
  void add_bytes(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      state_ ^= bytes[i];
      state_ *= 0x100000001b3ULL;
    }
  }
  void add(std::string_view text) {
    add_bytes(text.data(), text.size());
    add_int(static_cast<std::int64_t>(text.size()));
  }
  void add_int(std::int64_t value) { add_bytes(&value, sizeof value); }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace finspace
