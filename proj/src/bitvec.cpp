#include "bvmc/bitvec.hpp"

namespace bvmc {

namespace {

BitVec bool_bv(bool b) { return BitVec(1, b ? 1 : 0); }

// Sign-extend the width-bit value to the full 256 bits.
U256 sext_full(const BitVec &a) {
  if (!a.msb()) return a.raw();
  return a.raw() | (U256::ones().shl(a.width()));
}

// Signed comparison a < b on equal widths.
bool slt_raw(const BitVec &a, const BitVec &b) {
  bool sa = a.msb(), sb = b.msb();
  if (sa != sb) return sa;
  return a.raw() < b.raw();
}

U256 neg_raw(const BitVec &a) { return (~a.raw()) + U256::one(); }

// SMT-LIB signed division/remainder built from unsigned divrem on
// magnitudes. Division by zero follows the standard: bvsdiv x 0 is 1 for
// negative x and all-ones otherwise; bvsrem x 0 is x.
void sdivrem(const BitVec &a, const BitVec &b, BitVec *quo, BitVec *rem) {
  uint32_t w = a.width();
  if (b.is_zero()) {
    if (quo) *quo = a.msb() ? BitVec(w, 1) : BitVec(w, BitVec::mask(w));
    if (rem) *rem = a;
    return;
  }
  bool na = a.msb(), nb = b.msb();
  U256 ma = (na ? neg_raw(a) : a.raw()) & BitVec::mask(w);
  U256 mb = (nb ? neg_raw(b) : b.raw()) & BitVec::mask(w);
  U256 q, r;
  U256::divrem(ma, mb, q, r);
  if (quo) *quo = BitVec(w, (na != nb) ? (~q + U256::one()) : q);
  if (rem) *rem = BitVec(w, na ? (~r + U256::one()) : r);
}

}  // namespace

uint32_t unary_result_width(const UnaryOp &op, uint32_t a_width) {
  switch (op.kind) {
    case UnaryKind::Not:
    case UnaryKind::Neg:
    case UnaryKind::Inc:
    case UnaryKind::Dec:
      return a_width;
    case UnaryKind::Redand:
    case UnaryKind::Redor:
      return 1;
    case UnaryKind::Sext:
    case UnaryKind::Uext:
      if (op.arg0 < a_width) {
        throw Error("extension target smaller than operand width");
      }
      return op.arg0;
    case UnaryKind::Slice:
      if (op.arg0 >= a_width || op.arg0 < op.arg1) {
        throw Error("slice bounds out of range");
      }
      return op.arg0 - op.arg1 + 1;
  }
  throw Error("unknown unary kind");
}

uint32_t binary_result_width(BinaryKind op, uint32_t a_width,
                             uint32_t b_width) {
  switch (op) {
    case BinaryKind::Concat:
      return a_width + b_width;
    case BinaryKind::Eq:
    case BinaryKind::Neq:
    case BinaryKind::Ult:
    case BinaryKind::Ulte:
    case BinaryKind::Ugt:
    case BinaryKind::Ugte:
    case BinaryKind::Slt:
    case BinaryKind::Slte:
    case BinaryKind::Sgt:
    case BinaryKind::Sgte:
      if (a_width != b_width) throw Error("comparison width mismatch");
      return 1;
    default:
      if (a_width != b_width) throw Error("operand width mismatch");
      return a_width;
  }
}

BitVec eval_unary(const UnaryOp &op, const BitVec &a) {
  uint32_t w = a.width();
  switch (op.kind) {
    case UnaryKind::Not:
      return BitVec(w, ~a.raw());
    case UnaryKind::Neg:
      return BitVec(w, neg_raw(a));
    case UnaryKind::Inc:
      return BitVec(w, a.raw() + U256::one());
    case UnaryKind::Dec:
      return BitVec(w, a.raw() - U256::one());
    case UnaryKind::Redand:
      return bool_bv(a.is_ones());
    case UnaryKind::Redor:
      return bool_bv(!a.is_zero());
    case UnaryKind::Sext: {
      uint32_t tw = unary_result_width(op, w);
      return BitVec(tw, sext_full(a));
    }
    case UnaryKind::Uext: {
      uint32_t tw = unary_result_width(op, w);
      return BitVec(tw, a.raw());
    }
    case UnaryKind::Slice: {
      uint32_t tw = unary_result_width(op, w);
      return BitVec(tw, a.raw().shr(op.arg1));
    }
  }
  throw Error("unknown unary kind");
}

BitVec eval_binary(BinaryKind op, const BitVec &a, const BitVec &b) {
  uint32_t w = binary_result_width(op, a.width(), b.width());
  switch (op) {
    case BinaryKind::Add:
      return BitVec(w, a.raw() + b.raw());
    case BinaryKind::Sub:
      return BitVec(w, a.raw() - b.raw());
    case BinaryKind::Mul:
      return BitVec(w, a.raw() * b.raw());
    case BinaryKind::Udiv: {
      if (b.is_zero()) return BitVec(w, BitVec::mask(w));
      U256 q, r;
      U256::divrem(a.raw(), b.raw(), q, r);
      return BitVec(w, q);
    }
    case BinaryKind::Urem: {
      if (b.is_zero()) return a;
      U256 q, r;
      U256::divrem(a.raw(), b.raw(), q, r);
      return BitVec(w, r);
    }
    case BinaryKind::Sdiv: {
      BitVec q;
      sdivrem(a, b, &q, nullptr);
      return q;
    }
    case BinaryKind::Srem: {
      BitVec r;
      sdivrem(a, b, nullptr, &r);
      return r;
    }
    case BinaryKind::And:
      return BitVec(w, a.raw() & b.raw());
    case BinaryKind::Or:
      return BitVec(w, a.raw() | b.raw());
    case BinaryKind::Xor:
      return BitVec(w, a.raw() ^ b.raw());
    case BinaryKind::Sll: {
      if (!b.raw().fits_u64() || b.to_u64() >= w) return BitVec(w, 0);
      return BitVec(w, a.raw().shl(uint32_t(b.to_u64())));
    }
    case BinaryKind::Srl: {
      if (!b.raw().fits_u64() || b.to_u64() >= w) return BitVec(w, 0);
      return BitVec(w, a.raw().shr(uint32_t(b.to_u64())));
    }
    case BinaryKind::Sra: {
      U256 fill = a.msb() ? BitVec::mask(w) : U256::zero();
      if (!b.raw().fits_u64() || b.to_u64() >= w) return BitVec(w, fill);
      uint32_t n = uint32_t(b.to_u64());
      U256 shifted = a.raw().shr(n);
      if (a.msb()) shifted = shifted | (BitVec::mask(w) & ~BitVec::mask(w).shr(n));
      return BitVec(w, shifted);
    }
    case BinaryKind::Concat:
      // a forms the high bits, b the low bits.
      return BitVec(w, a.raw().shl(b.width()) | b.raw());
    case BinaryKind::Eq:
      return bool_bv(a.raw() == b.raw());
    case BinaryKind::Neq:
      return bool_bv(a.raw() != b.raw());
    case BinaryKind::Ult:
      return bool_bv(a.raw() < b.raw());
    case BinaryKind::Ulte:
      return bool_bv(!(b.raw() < a.raw()));
    case BinaryKind::Ugt:
      return bool_bv(b.raw() < a.raw());
    case BinaryKind::Ugte:
      return bool_bv(!(a.raw() < b.raw()));
    case BinaryKind::Slt:
      return bool_bv(slt_raw(a, b));
    case BinaryKind::Slte:
      return bool_bv(!slt_raw(b, a));
    case BinaryKind::Sgt:
      return bool_bv(slt_raw(b, a));
    case BinaryKind::Sgte:
      return bool_bv(!slt_raw(a, b));
  }
  throw Error("unknown binary kind");
}

BitVec eval_ite(const BitVec &cond, const BitVec &t, const BitVec &e) {
  if (cond.width() != 1) throw Error("ite condition must be 1 bit wide");
  if (t.width() != e.width()) throw Error("ite branch width mismatch");
  return cond.is_zero() ? e : t;
}

const char *unary_kind_name(UnaryKind k) {
  switch (k) {
    case UnaryKind::Not: return "not";
    case UnaryKind::Neg: return "neg";
    case UnaryKind::Inc: return "inc";
    case UnaryKind::Dec: return "dec";
    case UnaryKind::Redand: return "redand";
    case UnaryKind::Redor: return "redor";
    case UnaryKind::Sext: return "sext";
    case UnaryKind::Uext: return "uext";
    case UnaryKind::Slice: return "slice";
  }
  return "?";
}

const char *binary_kind_name(BinaryKind k) {
  switch (k) {
    case BinaryKind::Add: return "add";
    case BinaryKind::Sub: return "sub";
    case BinaryKind::Mul: return "mul";
    case BinaryKind::Udiv: return "udiv";
    case BinaryKind::Urem: return "urem";
    case BinaryKind::Sdiv: return "sdiv";
    case BinaryKind::Srem: return "srem";
    case BinaryKind::And: return "and";
    case BinaryKind::Or: return "or";
    case BinaryKind::Xor: return "xor";
    case BinaryKind::Sll: return "sll";
    case BinaryKind::Srl: return "srl";
    case BinaryKind::Sra: return "sra";
    case BinaryKind::Concat: return "concat";
    case BinaryKind::Eq: return "eq";
    case BinaryKind::Neq: return "neq";
    case BinaryKind::Ult: return "ult";
    case BinaryKind::Ulte: return "ulte";
    case BinaryKind::Ugt: return "ugt";
    case BinaryKind::Ugte: return "ugte";
    case BinaryKind::Slt: return "slt";
    case BinaryKind::Slte: return "slte";
    case BinaryKind::Sgt: return "sgt";
    case BinaryKind::Sgte: return "sgte";
  }
  return "?";
}

}  // namespace bvmc
