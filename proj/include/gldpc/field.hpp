#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace gldpc {

// Arithmetic in GF(p) for prime p and in GF(2^m).
//
// Elements are canonical integers in [0, q).  For a prime field the integer
// is the residue itself.  For GF(2^m) it is the coefficient bit-vector of the
// polynomial residue: bit i holds the coefficient of x^i.  Extension fields
// of odd characteristic (p > 2 with m > 1) are not supported.
//
// The GF(2^m) modulus is fixed per m (see primitive_modulus in field.cpp),
// so two fields with equal order have identical element encodings and are
// interchangeable.
class FiniteField {
 public:
  // Prime field GF(p).
  static FiniteField prime(std::uint32_t p);
  // Binary extension field GF(2^m), 1 <= m <= 11.
  static FiniteField binary_extension(unsigned m);
  // Dispatches on q: prime -> prime field, power of two -> GF(2^m).
  // Any other prime power is rejected.
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned extension_degree() const { return m_; }
  // Modulus polynomial bit-vector for GF(2^m); 0 for prime fields.
  std::uint32_t modulus() const { return modulus_; }

  bool operator==(const FiniteField& other) const {
    return q_ == other.q_ && modulus_ == other.modulus_;
  }
  bool operator!=(const FiniteField& other) const { return !(*this == other); }

  bool valid(std::uint32_t a) const { return a < q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    const std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    return a >= b ? a - b : a + q_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const {
    check_element(a);
    if (p_ == 2) return a;
    return a == 0 ? 0 : q_ - a;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) {
      return static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(a) * b) % q_);
    }
    return reduce(clmul(a, b));
  }

  // Multiplicative inverse; rejects zero.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // A fixed primitive element (generator of the multiplicative group).
  std::uint32_t primitive_element() const { return generator_; }

  std::string describe() const;

 private:
  FiniteField(std::uint32_t p, unsigned m, std::uint32_t q,
              std::uint32_t modulus);

  void check_element(std::uint32_t a) const;

  // Carry-less product of two polynomials over GF(2); fits 64 bits for
  // degrees up to 11.
  static std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t acc = 0;
    while (b) {
      if (b & 1) acc ^= a;
      a <<= 1;
      b >>= 1;
    }
    return acc;
  }

  // Reduce a polynomial of degree < 2m modulo the field modulus.
  std::uint32_t reduce(std::uint64_t v) const {
    for (int bit = 2 * static_cast<int>(m_) - 2;
         bit >= static_cast<int>(m_); --bit) {
      if (v >> bit & 1) v ^= static_cast<std::uint64_t>(modulus_) << (bit - m_);
    }
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::uint32_t modulus_;
  std::uint32_t generator_;
};

// Value-typed element for convenience in call sites and tests; the hot
// decoder paths work on raw symbol arrays plus a FiniteField reference.
struct FieldElement {
  const FiniteField* field;
  std::uint32_t value;

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {a.field, a.same(b).add(a.value, b.value)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {a.field, a.same(b).sub(a.value, b.value)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {a.field, a.same(b).mul(a.value, b.value)};
  }
  friend bool operator==(FieldElement a, FieldElement b) {
    return *a.field == *b.field && a.value == b.value;
  }

  const FiniteField& same(const FieldElement& other) const;
};

}  // namespace gldpc
