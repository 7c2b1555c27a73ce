#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>

#include "error.hpp"

namespace kmy {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view text) {
  static const std::regex re(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::cmatch m;
  std::string s(text);
  if (!std::regex_match(s.c_str(), m, re))
    throw Error("core.BadScalar", "not a rational number: '" + s + "'");
  BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw Error("core.BadScalar", "zero denominator in '" + s + "'");
  return Rational(num, den);
}

// a + b i with a, b rational.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  explicit Gaussian(long long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational norm = b.re * b.re + b.im * b.im;
    if (norm == 0) throw Error("core.DivisionByZero", "division by zero");
    return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline std::string to_string(const Gaussian& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = to_string(abs(z.im));
  std::string out = z.re == 0 ? "" : to_string(z.re);
  if (z.im < 0) out += "-";
  else if (!out.empty()) out += "+";
  return out + (im == "1" ? "" : im) + "i";
}

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with a, b rational.
inline Gaussian parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s.back() != 'i') return Gaussian(parse_rational(s));
  s.pop_back();
  // The imaginary part starts at the last sign that is not leading and not
  // inside a fraction.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  else if (im == "-") im = "-1";
  return {parse_rational(re), parse_rational(im)};
}

// Finite sum of c_k d^k over integer exponents k, d being the loop parameter.
class Laurent {
 public:
  Laurent() = default;
  Laurent(Rational c) { add_term(0, std::move(c)); }
  Laurent(long long c) : Laurent(Rational(c)) {}

  static Laurent monomial(int exponent, Rational c = 1) {
    Laurent p;
    p.add_term(exponent, std::move(c));
    return p;
  }
  static Laurent delta() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  Rational coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Laurent operator+(Laurent a, const Laurent& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }
  friend Laurent operator-(const Laurent& a) {
    Laurent r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) r.add_term(i + j, x * y);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  // Value at a point of Q or Q(i).  A negative power at zero is an error.
  template <class T>
  T evaluate(const T& x) const {
    T out{};
    bool zero = x == T{};
    for (const auto& [k, c] : terms_) {
      if (k < 0 && zero)
        throw Error("core.EvalAtZeroWithNegativePower",
                    "negative power of d evaluated at d = 0");
      T pw = T(Rational(1));
      T base = k < 0 ? T(Rational(1)) / x : x;
      for (int e = 0; e < std::abs(k); ++e) pw = pw * base;
      out = out + T(c) * pw;
    }
    return out;
  }

 private:
  std::map<int, Rational> terms_;
};

// Ascending exponents, e.g. "-d^2 + d^4", "1/2*d^-1", "0".
inline std::string to_string(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    Rational a = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "d" : "d^" + std::to_string(k));
    if (mono.empty()) out += to_string(a);
    else if (a == 1) out += mono;
    else out += to_string(a) + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

}  // namespace kmy
