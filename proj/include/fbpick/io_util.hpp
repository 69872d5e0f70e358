#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "fbpick/errors.hpp"

namespace fbpick {

// Little-endian primitives for the binary file formats.

inline void write_u32(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = char((v >> (8 * i)) & 0xFF);
  os.write(b, 4);
}

inline void write_u64(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = char((v >> (8 * i)) & 0xFF);
  os.write(b, 8);
}

inline void write_i32(std::ostream& os, std::int32_t v) {
  write_u32(os, std::bit_cast<std::uint32_t>(v));
}

inline void write_f32(std::ostream& os, float v) {
  write_u32(os, std::bit_cast<std::uint32_t>(v));
}

inline std::uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}

inline std::uint64_t read_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
  return v;
}

inline std::int32_t read_i32(std::istream& is) {
  return std::bit_cast<std::int32_t>(read_u32(is));
}

inline float read_f32(std::istream& is) {
  return std::bit_cast<float>(read_u32(is));
}

inline void write_magic(std::ostream& os, const char magic[4]) {
  os.write(magic, 4);
}

inline void expect_magic(std::istream& is, const char magic[4],
                         const std::string& path) {
  char b[4] = {0, 0, 0, 0};
  is.read(b, 4);
  if (!is || std::memcmp(b, magic, 4) != 0)
    throw ValidationError(path + ": bad magic, expected '" +
                          std::string(magic, 4) + "'");
}

inline std::ofstream open_output(const std::string& path, bool binary) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw ValidationError("cannot open output file: " + path);
  return os;
}

inline std::ifstream open_input(const std::string& path, bool binary) {
  std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
  if (!is) throw ValidationError("cannot open input file: " + path);
  return is;
}

}  // namespace fbpick
