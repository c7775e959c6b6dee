#include "rwpnn/binary_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "model files are little-endian; big-endian hosts need swaps");

namespace rwpnn::io {

namespace {
constexpr char kMagic[8] = {'R', 'W', 'P', 'N', 'N', 'B', 'I', 'N'};
constexpr std::size_t kHeaderSize = 8 + 4 + 4 + 8;
}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < size; ++i) {
    hash ^= p[i];
    hash *= 0x100000001b3ull;
  }
  return hash;
}

void BinaryWriter::raw(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  payload_.insert(payload_.end(), p, p + size);
}

void BinaryWriter::u32(std::uint32_t v) { raw(&v, sizeof v); }
void BinaryWriter::u64(std::uint64_t v) { raw(&v, sizeof v); }
void BinaryWriter::i32(std::int32_t v) { raw(&v, sizeof v); }
void BinaryWriter::i64(std::int64_t v) { raw(&v, sizeof v); }
void BinaryWriter::f64(double v) { raw(&v, sizeof v); }
void BinaryWriter::f64_array(const double* data, std::size_t count) {
  raw(data, count * sizeof(double));
}

void BinaryWriter::write_file(const std::filesystem::path& path,
                              FileKind kind) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    const auto kind_raw = static_cast<std::uint32_t>(kind);
    const std::uint64_t size = payload_.size();
    const std::uint64_t checksum = fnv1a64(payload_.data(), payload_.size());
    out.write(kMagic, sizeof kMagic);
    out.write(reinterpret_cast<const char*>(&kind_raw), sizeof kind_raw);
    out.write(reinterpret_cast<const char*>(&kFormatVersion),
              sizeof kFormatVersion);
    out.write(reinterpret_cast<const char*>(&size), sizeof size);
    out.write(reinterpret_cast<const char*>(payload_.data()),
              static_cast<std::streamsize>(payload_.size()));
    out.write(reinterpret_cast<const char*>(&checksum), sizeof checksum);
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

BinaryReader BinaryReader::open(const std::filesystem::path& path,
                                FileKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  char header[kHeaderSize];
  in.read(header, sizeof header);
  if (in.gcount() != static_cast<std::streamsize>(sizeof header))
    throw TruncationError(path.string() + ": file shorter than header");
  if (std::memcmp(header, kMagic, sizeof kMagic) != 0)
    throw FormatError(path.string() + ": bad magic bytes");

  std::uint32_t kind_raw, version;
  std::uint64_t size;
  std::memcpy(&kind_raw, header + 8, sizeof kind_raw);
  std::memcpy(&version, header + 12, sizeof version);
  std::memcpy(&size, header + 16, sizeof size);

  if (kind_raw != static_cast<std::uint32_t>(kind))
    throw FormatError(path.string() + ": unexpected file kind " +
                      std::to_string(kind_raw));
  if (version != kFormatVersion)
    throw VersionError(path.string() + ": format version " +
                       std::to_string(version) + ", expected " +
                       std::to_string(kFormatVersion));

  BinaryReader reader;
  reader.payload_.resize(size);
  in.read(reinterpret_cast<char*>(reader.payload_.data()),
          static_cast<std::streamsize>(size));
  if (in.gcount() != static_cast<std::streamsize>(size))
    throw TruncationError(path.string() + ": payload truncated");

  std::uint64_t stored;
  in.read(reinterpret_cast<char*>(&stored), sizeof stored);
  if (in.gcount() != static_cast<std::streamsize>(sizeof stored))
    throw TruncationError(path.string() + ": checksum missing");
  const std::uint64_t actual =
      fnv1a64(reader.payload_.data(), reader.payload_.size());
  if (stored != actual)
    throw ChecksumError(path.string() + ": payload checksum mismatch");
  return reader;
}

void BinaryReader::raw(void* out, std::size_t size) {
  if (pos_ + size > payload_.size())
    throw TruncationError("payload ended while reading field");
  std::memcpy(out, payload_.data() + pos_, size);
  pos_ += size;
}

std::uint32_t BinaryReader::u32() { std::uint32_t v; raw(&v, sizeof v); return v; }
std::uint64_t BinaryReader::u64() { std::uint64_t v; raw(&v, sizeof v); return v; }
std::int32_t BinaryReader::i32() { std::int32_t v; raw(&v, sizeof v); return v; }
std::int64_t BinaryReader::i64() { std::int64_t v; raw(&v, sizeof v); return v; }
double BinaryReader::f64() { double v; raw(&v, sizeof v); return v; }
void BinaryReader::f64_array(double* out, std::size_t count) {
  raw(out, count * sizeof(double));
}

}  // namespace rwpnn::io
