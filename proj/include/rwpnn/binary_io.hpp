#pragma once

#include "rwpnn/errors.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rwpnn::io {

//! Shared binary container for model files. Layout (all little-endian):
//!   bytes 0..7   magic "RWPNNBIN"
//!   bytes 8..11  file kind (u32)
//!   bytes 12..15 format version (u32)
//!   bytes 16..23 payload size in bytes (u64)
//!   payload
//!   8-byte FNV-1a checksum of the payload
enum class FileKind : std::uint32_t {
  mrwpn_model = 1,
  autoencoder = 2,
};

inline constexpr std::uint32_t kFormatVersion = 1;

std::uint64_t fnv1a64(const void* data, std::size_t size);

//! Accumulates a payload in memory, then writes the whole container
//! atomically (temp file + rename).
class BinaryWriter {
public:
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i32(std::int32_t v);
  void i64(std::int64_t v);
  void f64(double v);
  void f64_array(const double* data, std::size_t count);

  void write_file(const std::filesystem::path& path, FileKind kind) const;

private:
  void raw(const void* data, std::size_t size);
  std::vector<unsigned char> payload_;
};

//! Loads and validates a container, then hands out payload fields in order.
//! Reading past the payload throws TruncationError.
class BinaryReader {
public:
  static BinaryReader open(const std::filesystem::path& path, FileKind kind);

  std::uint32_t u32();
  std::uint64_t u64();
  std::int32_t i32();
  std::int64_t i64();
  double f64();
  void f64_array(double* out, std::size_t count);

  std::size_t remaining() const { return payload_.size() - pos_; }

private:
  void raw(void* out, std::size_t size);
  std::vector<unsigned char> payload_;
  std::size_t pos_ = 0;
};

}  // namespace rwpnn::io
