#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace bvmc {

// Fixed-size 256-bit unsigned integer, little-endian limb order.
// Backs both bitvector values (widths up to 256) and byte-set masks.
struct U256 {
  std::array<uint64_t, 4> w{0, 0, 0, 0};

  U256() = default;
  explicit U256(uint64_t lo) : w{lo, 0, 0, 0} {}

  static U256 zero() { return U256(); }
  static U256 one() { return U256(1); }
  static U256 ones();  // all 256 bits set

  bool is_zero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  bool bit(uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set_bit(uint32_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void clear_bit(uint32_t i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  uint64_t lo64() const { return w[0]; }
  bool fits_u64() const { return (w[1] | w[2] | w[3]) == 0; }

  uint32_t popcount() const;
  // Number of significant bits (position of highest set bit + 1); 0 for zero.
  uint32_t bit_length() const;

  friend bool operator==(const U256 &a, const U256 &b) { return a.w == b.w; }
  friend bool operator!=(const U256 &a, const U256 &b) { return !(a == b); }
  friend bool operator<(const U256 &a, const U256 &b);

  U256 operator~() const;
  U256 operator&(const U256 &o) const;
  U256 operator|(const U256 &o) const;
  U256 operator^(const U256 &o) const;

  U256 operator+(const U256 &o) const;
  U256 operator-(const U256 &o) const;
  U256 operator*(const U256 &o) const;  // low 256 bits

  U256 shl(uint32_t n) const;  // n >= 256 yields zero
  U256 shr(uint32_t n) const;

  // Quotient and remainder; division by zero is the caller's problem.
  static void divrem(const U256 &num, const U256 &den, U256 &quo, U256 &rem);

  std::string to_hex() const;      // minimal-width hex, no 0x prefix
  std::string to_dec() const;
  std::string to_bin(uint32_t width) const;

  static bool parse_dec(const std::string &s, U256 &out);  // unsigned digits only
  static bool parse_hex(const std::string &s, U256 &out);
  static bool parse_bin(const std::string &s, U256 &out);

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t limb : w) {
      h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace bvmc
