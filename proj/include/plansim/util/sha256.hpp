#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plansim {

/// Streaming SHA-256 used for dataset content hashes.
class Sha256 {
 public:
  Sha256();
  Sha256& update(std::string_view bytes);
  Sha256& update(const std::uint8_t* data, std::size_t len);
  /// Finishes and returns the lowercase hex digest.
  std::string hex_digest();

  static std::string of(std::string_view bytes);

 private:
  void process_block(const std::uint8_t* block);

  std::uint32_t h_[8];
  std::uint8_t buffer_[64];
  std::size_t buffered_ = 0;
  std::uint64_t total_ = 0;
  bool finished_ = false;
};

}  // namespace plansim
