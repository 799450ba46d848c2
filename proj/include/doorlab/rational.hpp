#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace doorlab {

// Exact rational number with 64-bit numerator and denominator.
//
// Always normalized: den > 0 and gcd(|num|, den) == 1, so structural equality
// is value equality. Intermediate products are computed in 128 bits; a result
// that does not fit back into 64 bits throws std::overflow_error rather than
// wrapping.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {} // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q" with q >= 1 (always includes the denominator).
  std::string to_string() const;
  // Accepts "p", "p/q", optionally signed, surrounding blanks ignored.
  static Rational parse(std::string_view text);

private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Complex number with exact rational parts.
struct ExactComplex {
  Rational re;
  Rational im;

  constexpr ExactComplex() = default;
  ExactComplex(Rational real) : re(real) {} // NOLINT(implicit)
  ExactComplex(std::int64_t real) : re(real) {} // NOLINT(implicit)
  ExactComplex(Rational real, Rational imag) : re(real), im(imag) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ExactComplex operator-() const { return {-re, -im}; }
  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  // Division by a nonzero complex value.
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b);

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
  // Lexicographic on (re, im); a total order for containers, not a field order.
  friend std::strong_ordering operator<=>(const ExactComplex& a, const ExactComplex& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }

  // "1/2", "-3/1", "1/2+3/4i", "-i" style rendering.
  std::string to_string() const;
  // Parses rationals ("-3", "1/2") and complex values ("1+2i", "-1/2-3/4i",
  // "2i/3", "i"). Throws DomainError on malformed input.
  static ExactComplex parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

} // namespace doorlab

template <>
struct std::hash<doorlab::ExactComplex> {
  std::size_t operator()(const doorlab::ExactComplex& z) const noexcept {
    auto h = std::hash<std::int64_t>{};
    std::size_t seed = h(z.re.num());
    for (auto v : {z.re.den(), z.im.num(), z.im.den()})
      seed ^= h(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};
