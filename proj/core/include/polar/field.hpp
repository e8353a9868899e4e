#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace polar {

/// Element of GF(2^h) in the polynomial basis; bit i is the coefficient
/// of omega^i.
using felem = std::uint16_t;

/// GF(2^h) for h <= 8. All operations are closed-form bit arithmetic on
/// the polynomial basis; no tables are built. Immutable after construction.
class Field {
public:
  /// Field with the fixed default modulus for the given degree.
  explicit Field(int h);

  /// Field with an explicit modulus (degree-h bit pattern, top bit set).
  /// The modulus is checked for irreducibility by exhaustive division.
  Field(int h, unsigned modulus);

  int degree() const { return h_; }
  unsigned order() const { return 1u << h_; }
  unsigned modulus() const { return modulus_; }

  felem add(felem x, felem y) const { return check(x), check(y), x ^ y; }
  felem mul(felem x, felem y) const;
  felem pow(felem x, unsigned e) const;
  felem inv(felem x) const;

  /// Absolute trace x + x^2 + ... + x^(2^(h-1)), always 0 or 1.
  int trace(felem x) const;

  /// The unique y with y^2 = x (Frobenius is bijective).
  felem sqrt(felem x) const;

  /// Smallest t with t^2 + t = lambda, or nullopt when trace(lambda) = 1.
  std::optional<felem> solve_artin_schreier(felem lambda) const;

  /// LSB-first coefficient bit string, e.g. GF(4) omega -> "01".
  std::string render(felem x) const;

  bool operator==(const Field&) const = default;

private:
  void check(felem x) const;

  int h_;
  unsigned modulus_;
};

/// Fixed default moduli (h=2: x^2+x+1, h=3: x^3+x+1, h=4: x^4+x+1, ...).
unsigned default_modulus(int h);

/// Exhaustive irreducibility test for binary polynomials of degree <= 8.
bool poly_irreducible(unsigned poly, int deg);

}  // namespace polar
