#pragma once

#include <map>
#include <string>

#include "diagram.hpp"
#include "scalar.hpp"

namespace kmy {

template <class C>
bool is_zero(const C& c) {
  if constexpr (requires { c.is_zero(); }) return c.is_zero();
  else return c == C(0);
}

// The value of d^k in the coefficient ring.  Laurent keeps d symbolic; Q and
// Q(i) need the specialised value of d.
template <class C>
C delta_power(const C& delta, int k) {
  C out = C(1);
  for (int i = 0; i < k; ++i) out = out * delta;
  return out;
}

// Finite formal sum of diagrams of one size with coefficients in C.  Rings
// are never mixed implicitly: Element<Rational> and Element<Laurent> are
// distinct types.
template <class C>
class Element {
 public:
  explicit Element(int n) : n_(n) {}
  Element(const Diagram& d, C c = C(1)) : n_(d.n()) { add(d, std::move(c)); }

  int n() const { return n_; }
  const std::map<Diagram, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(const Diagram& d, const C& c) {
    if (d.n() != n_) throw Error("core.SizeMismatch", "diagram size differs from element size");
    if (kmy::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(d, c);
    if (!fresh) {
      it->second = it->second + c;
      if (kmy::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend Element operator+(Element a, const Element& b) {
    a.check(b);
    for (const auto& [d, c] : b.terms_) a.add(d, c);
    return a;
  }
  friend Element operator-(const Element& a) {
    Element r(a.n_);
    for (const auto& [d, c] : a.terms_) r.terms_.emplace(d, -c);
    return r;
  }
  friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
  friend Element operator*(const C& s, const Element& a) {
    Element r(a.n_);
    for (const auto& [d, c] : a.terms_) r.add(d, s * c);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Bilinear extension of diagram multiplication; each closed loop
  // contributes a factor delta.
  Element mul(const Element& b, const C& delta) const {
    check(b);
    Element r(n_);
    for (const auto& [x, cx] : terms_)
      for (const auto& [y, cy] : b.terms_) {
        auto [loops, z] = multiply(x, y);
        r.add(z, cx * cy * delta_power(delta, loops));
      }
    return r;
  }

 private:
  void check(const Element& b) const {
    if (b.n_ != n_) throw Error("core.SizeMismatch", "elements of different sizes");
  }

  int n_;
  std::map<Diagram, C> terms_;
};

// Symbolic product in Q[d, 1/d].
inline Element<Laurent> operator*(const Element<Laurent>& a, const Element<Laurent>& b) {
  return a.mul(b, Laurent::delta());
}

// Specialise d to a value of Q or Q(i).
template <class T>
Element<T> evaluate(const Element<Laurent>& a, const T& delta0) {
  Element<T> r(a.n());
  for (const auto& [d, c] : a.terms()) r.add(d, c.evaluate(delta0));
  return r;
}

template <class C>
std::string to_string(const Element<C>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [d, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")[" + to_string(d) + "]";
  }
  return out;
}

}  // namespace kmy
