#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bvmc/u256.hpp"

namespace bvmc {

// Raised for structural problems: width mismatches, malformed models,
// out-of-range slice bounds and the like.
struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

constexpr uint32_t kMaxWidth = 256;

// Two's-complement bitvector value of a fixed width between 1 and 256 bits.
// The stored value is always reduced modulo 2^width.
class BitVec {
 public:
  BitVec() : width_(1) {}
  BitVec(uint32_t width, uint64_t value) : BitVec(width, U256(value)) {}
  BitVec(uint32_t width, const U256 &value) : width_(width), val_(value) {
    if (width < 1 || width > kMaxWidth) {
      throw Error("bitvector width out of range: " + std::to_string(width));
    }
    truncate();
  }

  uint32_t width() const { return width_; }
  const U256 &raw() const { return val_; }
  uint64_t to_u64() const { return val_.lo64(); }
  bool is_zero() const { return val_.is_zero(); }
  bool is_ones() const { return val_ == mask(width_); }
  bool is_true() const { return width_ == 1 && !val_.is_zero(); }
  bool bit(uint32_t i) const { return i < width_ && val_.bit(i); }
  bool msb() const { return val_.bit(width_ - 1); }

  std::string to_hex() const { return val_.to_hex(); }
  std::string to_dec() const { return val_.to_dec(); }
  std::string to_bin() const { return val_.to_bin(width_); }

  friend bool operator==(const BitVec &a, const BitVec &b) {
    return a.width_ == b.width_ && a.val_ == b.val_;
  }
  friend bool operator!=(const BitVec &a, const BitVec &b) { return !(a == b); }

  size_t hash() const { return val_.hash() * 31 + width_; }

  static U256 mask(uint32_t width) {
    return U256::ones().shr(kMaxWidth - width);
  }

 private:
  void truncate() { val_ = val_ & mask(width_); }

  uint32_t width_;
  U256 val_;
};

struct BitVecHash {
  size_t operator()(const BitVec &v) const { return v.hash(); }
};

enum class UnaryKind {
  Not, Neg, Inc, Dec, Redand, Redor, Sext, Uext, Slice
};

enum class BinaryKind {
  Add, Sub, Mul, Udiv, Urem, Sdiv, Srem,
  And, Or, Xor, Sll, Srl, Sra, Concat,
  Eq, Neq, Ult, Ulte, Ugt, Ugte, Slt, Slte, Sgt, Sgte
};

// Unary operator with its static parameters: extension target width for
// sext/uext, bit bounds for slice. Unused for the rest.
struct UnaryOp {
  UnaryKind kind;
  uint32_t arg0 = 0;  // target width (sext/uext) or hi (slice)
  uint32_t arg1 = 0;  // lo (slice)

  friend bool operator==(const UnaryOp &a, const UnaryOp &b) {
    return a.kind == b.kind && a.arg0 == b.arg0 && a.arg1 == b.arg1;
  }
};

// SMT-LIB bitvector semantics throughout: arithmetic wraps modulo 2^width,
// udiv by zero yields all ones, urem by zero the dividend, comparisons
// return 1-bit results, shifts >= width flush to zero (sign for sra).
BitVec eval_unary(const UnaryOp &op, const BitVec &a);
BitVec eval_binary(BinaryKind op, const BitVec &a, const BitVec &b);
BitVec eval_ite(const BitVec &cond, const BitVec &t, const BitVec &e);

// Result width of an operator application, without evaluating it.
uint32_t unary_result_width(const UnaryOp &op, uint32_t a_width);
uint32_t binary_result_width(BinaryKind op, uint32_t a_width, uint32_t b_width);

const char *unary_kind_name(UnaryKind k);
const char *binary_kind_name(BinaryKind k);

}  // namespace bvmc
