#include "gldpc/field.hpp"

#include <stdexcept>

namespace gldpc {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// Modulus polynomials for GF(2^m), bit i = coefficient of x^i.  These are
// the conventional primitive polynomials of least weight; each is verified
// primitive by the test suite (x generates the full multiplicative group).
constexpr std::uint32_t kModulusTable[12] = {
    0,      // m = 0 (unused)
    0x3,    // m = 1:  x + 1 (GF(2) handled as a prime field)
    0x7,    // m = 2:  x^2 + x + 1
    0xB,    // m = 3:  x^3 + x + 1
    0x13,   // m = 4:  x^4 + x + 1
    0x25,   // m = 5:  x^5 + x^2 + 1
    0x43,   // m = 6:  x^6 + x + 1
    0x89,   // m = 7:  x^7 + x^3 + 1
    0x11D,  // m = 8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,  // m = 9:  x^9 + x^4 + 1
    0x409,  // m = 10: x^10 + x^3 + 1
    0x805,  // m = 11: x^11 + x^2 + 1
};

// Smallest generator of the multiplicative group of GF(p).
std::uint32_t find_prime_generator(std::uint32_t p) {
  if (p == 2) return 1;
  // Factor p-1, then test candidates g by checking g^((p-1)/f) != 1.
  std::vector<std::uint32_t> factors;
  std::uint32_t n = p - 1;
  for (std::uint32_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      factors.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) factors.push_back(n);
  auto pow_mod = [p](std::uint64_t base, std::uint32_t e) {
    std::uint64_t acc = 1;
    base %= p;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  };
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t f : factors) {
      if (pow_mod(g, (p - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no generator found; p is not prime?");
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned m, std::uint32_t q,
                         std::uint32_t modulus)
    : p_(p), m_(m), q_(q), modulus_(modulus), generator_(0) {
  generator_ = (m_ == 1) ? find_prime_generator(p_)
                         : 2;  // the class of x, primitive by table choice
}

FiniteField FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field order " + std::to_string(p) +
                                " is not prime");
  }
  return FiniteField(p, 1, p, 0);
}

FiniteField FiniteField::binary_extension(unsigned m) {
  if (m < 1 || m > 11) {
    throw std::invalid_argument("GF(2^m) supported for 1 <= m <= 11, got m=" +
                                std::to_string(m));
  }
  if (m == 1) return prime(2);
  return FiniteField(2, m, 1u << m, kModulusTable[m]);
}

FiniteField FiniteField::of_order(std::uint32_t q) {
  if (q >= 2 && (q & (q - 1)) == 0) {
    unsigned m = 0;
    while ((1u << m) < q) ++m;
    return binary_extension(m);
  }
  if (is_prime(q)) return prime(q);
  throw std::invalid_argument(
      "unsupported field order " + std::to_string(q) +
      " (must be prime or a power of two up to 2^11)");
}

void FiniteField::check_element(std::uint32_t a) const {
  if (a >= q_) {
    throw std::invalid_argument("value " + std::to_string(a) +
                                " is not an element of " + describe());
  }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  check_element(a);
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  // a^(q-2) = a^-1 in any finite field of order q.
  return pow(a, q_ - 2);
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  check_element(a);
  std::uint32_t acc = 1;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string FiniteField::describe() const {
  if (m_ == 1) return "GF(" + std::to_string(q_) + ")";
  return "GF(2^" + std::to_string(m_) + ")";
}

const FiniteField& FieldElement::same(const FieldElement& other) const {
  if (*field != *other.field) {
    throw std::invalid_argument("elements of " + field->describe() + " and " +
                                other.field->describe() + " cannot be mixed");
  }
  return *field;
}

}  // namespace gldpc
