#include "bvmc/u256.hpp"

#include <bit>
#include <stdexcept>

namespace bvmc {

U256 U256::ones() {
  U256 r;
  r.w = {~0ull, ~0ull, ~0ull, ~0ull};
  return r;
}

uint32_t U256::popcount() const {
  uint32_t n = 0;
  for (uint64_t limb : w) n += std::popcount(limb);
  return n;
}

uint32_t U256::bit_length() const {
  for (int i = 3; i >= 0; --i) {
    if (w[i]) return uint32_t(i) * 64 + (64 - std::countl_zero(w[i]));
  }
  return 0;
}

bool operator<(const U256 &a, const U256 &b) {
  for (int i = 3; i >= 0; --i) {
    if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
  }
  return false;
}

U256 U256::operator~() const {
  U256 r;
  for (int i = 0; i < 4; ++i) r.w[i] = ~w[i];
  return r;
}

U256 U256::operator&(const U256 &o) const {
  U256 r;
  for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
  return r;
}

U256 U256::operator|(const U256 &o) const {
  U256 r;
  for (int i = 0; i < 4; ++i) r.w[i] = w[i] | o.w[i];
  return r;
}

U256 U256::operator^(const U256 &o) const {
  U256 r;
  for (int i = 0; i < 4; ++i) r.w[i] = w[i] ^ o.w[i];
  return r;
}

U256 U256::operator+(const U256 &o) const {
  U256 r;
  unsigned __int128 carry = 0;
  for (int i = 0; i < 4; ++i) {
    unsigned __int128 s = (unsigned __int128)w[i] + o.w[i] + carry;
    r.w[i] = (uint64_t)s;
    carry = s >> 64;
  }
  return r;
}

U256 U256::operator-(const U256 &o) const {
  U256 r;
  unsigned __int128 borrow = 0;
  for (int i = 0; i < 4; ++i) {
    unsigned __int128 d = (unsigned __int128)w[i] - o.w[i] - borrow;
    r.w[i] = (uint64_t)d;
    borrow = (d >> 64) ? 1 : 0;
  }
  return r;
}

U256 U256::operator*(const U256 &o) const {
  U256 r;
  for (int i = 0; i < 4; ++i) {
    if (w[i] == 0) continue;
    uint64_t carry = 0;
    for (int j = 0; i + j < 4; ++j) {
      unsigned __int128 cur =
          (unsigned __int128)w[i] * o.w[j] + r.w[i + j] + carry;
      r.w[i + j] = (uint64_t)cur;
      carry = (uint64_t)(cur >> 64);
    }
  }
  return r;
}

U256 U256::shl(uint32_t n) const {
  if (n >= 256) return U256();
  U256 r;
  uint32_t limbs = n / 64, bits = n % 64;
  for (int i = 3; i >= 0; --i) {
    uint64_t v = 0;
    int src = i - int(limbs);
    if (src >= 0) {
      v = w[src] << bits;
      if (bits && src > 0) v |= w[src - 1] >> (64 - bits);
    }
    r.w[i] = v;
  }
  return r;
}

U256 U256::shr(uint32_t n) const {
  if (n >= 256) return U256();
  U256 r;
  uint32_t limbs = n / 64, bits = n % 64;
  for (int i = 0; i < 4; ++i) {
    uint64_t v = 0;
    uint32_t src = uint32_t(i) + limbs;
    if (src < 4) {
      v = w[src] >> bits;
      if (bits && src + 1 < 4) v |= w[src + 1] << (64 - bits);
    }
    r.w[i] = v;
  }
  return r;
}

void U256::divrem(const U256 &num, const U256 &den, U256 &quo, U256 &rem) {
  if (den.is_zero()) throw std::domain_error("U256 division by zero");
  if (den.fits_u64() && num.fits_u64()) {
    quo = U256(num.w[0] / den.w[0]);
    rem = U256(num.w[0] % den.w[0]);
    return;
  }
  quo = U256();
  rem = U256();
  uint32_t n = num.bit_length();
  for (int i = int(n) - 1; i >= 0; --i) {
    rem = rem.shl(1);
    if (num.bit(uint32_t(i))) rem.w[0] |= 1;
    if (!(rem < den)) {
      rem = rem - den;
      quo.set_bit(uint32_t(i));
    }
  }
}

std::string U256::to_hex() const {
  static const char *digits = "0123456789abcdef";
  std::string s;
  uint32_t nibbles = (bit_length() + 3) / 4;
  if (nibbles == 0) return "0";
  for (int i = int(nibbles) - 1; i >= 0; --i) {
    uint32_t nib = (w[(i * 4) >> 6] >> ((i * 4) & 63)) & 0xf;
    s.push_back(digits[nib]);
  }
  return s;
}

std::string U256::to_dec() const {
  if (is_zero()) return "0";
  U256 v = *this;
  U256 ten(10), q, r;
  std::string s;
  while (!v.is_zero()) {
    divrem(v, ten, q, r);
    s.push_back(char('0' + r.w[0]));
    v = q;
  }
  return std::string(s.rbegin(), s.rend());
}

std::string U256::to_bin(uint32_t width) const {
  std::string s(width, '0');
  for (uint32_t i = 0; i < width; ++i) {
    if (bit(i)) s[width - 1 - i] = '1';
  }
  return s;
}

bool U256::parse_dec(const std::string &s, U256 &out) {
  if (s.empty()) return false;
  U256 v;
  U256 ten(10);
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * ten + U256(uint64_t(c - '0'));
  }
  out = v;
  return true;
}

bool U256::parse_hex(const std::string &s, U256 &out) {
  if (s.empty() || s.size() > 64) return false;
  U256 v;
  for (char c : s) {
    uint64_t d;
    if (c >= '0' && c <= '9') d = uint64_t(c - '0');
    else if (c >= 'a' && c <= 'f') d = uint64_t(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') d = uint64_t(c - 'A' + 10);
    else return false;
    v = v.shl(4);
    v.w[0] |= d;
  }
  out = v;
  return true;
}

bool U256::parse_bin(const std::string &s, U256 &out) {
  if (s.empty() || s.size() > 256) return false;
  U256 v;
  for (char c : s) {
    if (c != '0' && c != '1') return false;
    v = v.shl(1);
    if (c == '1') v.w[0] |= 1;
  }
  out = v;
  return true;
}

}  // namespace bvmc
