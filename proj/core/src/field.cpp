#include "polar/field.hpp"

#include <stdexcept>

namespace polar {

namespace {

// Degree of a nonzero binary polynomial.
int poly_deg(unsigned p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

// Remainder of binary polynomial division a mod b, b != 0.
unsigned poly_mod(unsigned a, unsigned b) {
  int db = poly_deg(b);
  while (poly_deg(a) >= db) a ^= b << (poly_deg(a) - db);
  return a;
}

}  // namespace

bool poly_irreducible(unsigned poly, int deg) {
  if (deg < 1 || poly_deg(poly) != deg) return false;
  if (deg == 1) return true;
  if ((poly & 1u) == 0) return false;  // divisible by x
  for (int k = 1; 2 * k <= deg; ++k)
    for (unsigned d = 1u << k; d < (2u << k); ++d)
      if (poly_mod(poly, d) == 0) return false;
  return true;
}

unsigned default_modulus(int h) {
  switch (h) {
    case 1: return 0b10;          // x
    case 2: return 0b111;         // x^2+x+1
    case 3: return 0b1011;        // x^3+x+1
    case 4: return 0b10011;       // x^4+x+1
    case 5: return 0b100101;      // x^5+x^2+1
    case 6: return 0b1000011;     // x^6+x+1
    case 7: return 0b10000011;    // x^7+x+1
    case 8: return 0b100011011;   // x^8+x^4+x^3+x+1
    default: throw std::invalid_argument("field degree must be in 1..8");
  }
}

Field::Field(int h) : Field(h, default_modulus(h)) {}

Field::Field(int h, unsigned modulus) : h_(h), modulus_(modulus) {
  if (h < 1 || h > 8) throw std::invalid_argument("field degree must be in 1..8");
  if (!poly_irreducible(modulus, h))
    throw std::invalid_argument("modulus is not an irreducible polynomial of the stated degree");
}

void Field::check(felem x) const {
  if (x >= order()) throw std::invalid_argument("field element out of range");
}

felem Field::mul(felem x, felem y) const {
  check(x);
  check(y);
  unsigned r = 0, a = x;
  for (unsigned b = y; b; b >>= 1) {
    if (b & 1u) r ^= a;
    a <<= 1;
    if (a & (1u << h_)) a ^= modulus_;
  }
  return static_cast<felem>(r);
}

felem Field::pow(felem x, unsigned e) const {
  check(x);
  felem r = 1, b = x;
  while (e) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

felem Field::inv(felem x) const {
  check(x);
  if (x == 0) throw std::domain_error("inversion of zero");
  return pow(x, order() - 2);
}

int Field::trace(felem x) const {
  check(x);
  felem s = 0, p = x;
  for (int i = 0; i < h_; ++i) {
    s ^= p;
    p = mul(p, p);
  }
  if (s > 1) throw std::logic_error("trace left the prime field");
  return s;
}

felem Field::sqrt(felem x) const {
  check(x);
  return pow(x, 1u << (h_ - 1));
}

std::optional<felem> Field::solve_artin_schreier(felem lambda) const {
  check(lambda);
  if (trace(lambda) != 0) return std::nullopt;
  for (unsigned t = 0; t < order(); ++t)
    if ((mul(felem(t), felem(t)) ^ t) == lambda) return felem(t);
  throw std::logic_error("trace-zero element without Artin-Schreier root");
}

std::string Field::render(felem x) const {
  check(x);
  std::string s(h_, '0');
  for (int i = 0; i < h_; ++i)
    if (x & (1u << i)) s[i] = '1';
  return s;
}

}  // namespace polar
