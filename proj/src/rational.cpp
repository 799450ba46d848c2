#include "doorlab/rational.hpp"

#include "doorlab/error.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace doorlab {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("malformed number '" + std::string(whole) + "'");
  return v;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  r.num_ = -num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    __int128 s = static_cast<__int128>(num_) + rhs.num_;
    if (!fits64(s)) throw std::overflow_error("rational overflow");
    num_ = static_cast<std::int64_t>(s);
    return *this;
  }
  *this = from_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                    static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division by zero");
  *this = from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  return Rational(parse_int(trim(s.substr(0, slash)), text), parse_int(trim(s.substr(slash + 1)), text));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
  Rational norm = b.re * b.re + b.im * b.im;
  if (norm.is_zero()) throw DomainError("division by zero");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

std::string ExactComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag = im.to_string() + "i";
  if (re.is_zero()) return imag;
  return re.to_string() + (im < Rational(0) ? "" : "+") + imag;
}

namespace {

// Imaginary term without sign: "i", "3i", "3/4i", "3i/4".
Rational parse_imaginary(std::string_view term, std::string_view whole) {
  auto pos = term.find('i');
  std::string_view before = term.substr(0, pos);
  std::string_view after = term.substr(pos + 1);
  if (after.empty()) return before.empty() ? Rational(1) : Rational::parse(before);
  if (after.front() != '/' || before.find('/') != std::string_view::npos)
    throw DomainError("malformed complex number '" + std::string(whole) + "'");
  Rational num = before.empty() ? Rational(1) : Rational(parse_int(before, whole));
  return num / Rational(parse_int(after.substr(1), whole));
}

} // namespace

ExactComplex ExactComplex::parse(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw DomainError("empty number");
  if (s.find('i') == std::string_view::npos) return ExactComplex(Rational::parse(s));
  if (s.back() != 'i' && s.find("i/") == std::string_view::npos)
    throw DomainError("malformed complex number '" + std::string(text) + "'");

  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? s : s.substr(split);

  bool negative = false;
  if (!imag_part.empty() && (imag_part.front() == '+' || imag_part.front() == '-')) {
    negative = imag_part.front() == '-';
    imag_part.remove_prefix(1);
  }
  Rational imag = parse_imaginary(trim(imag_part), text);
  if (negative) imag = -imag;
  Rational real = real_part.empty() ? Rational(0) : Rational::parse(real_part);
  return {real, imag};
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.to_string(); }

} // namespace doorlab
