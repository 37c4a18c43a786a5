#pragma once

#include <stdexcept>
#include <vector>

namespace synckit {

// Small finite field of order p or p^2 (p prime, p <= 31). Degree-2 elements
// are a + b x with x^2 = d for the least non-residue d, encoded as a + b p.
// Field axioms are checked exhaustively at construction.
class Gf {
 public:
  static Gf prime_field(int p) { return Gf(p, 1); }
  static Gf quadratic_field(int p) { return Gf(p, 2); }

  int characteristic() const { return p_; }
  int degree() const { return deg_; }
  int size() const { return q_; }
  int nonresidue() const { return d_; }

  int add(int a, int b) const {
    check(a);
    check(b);
    if (deg_ == 1) return (a + b) % p_;
    return (a % p_ + b % p_) % p_ + ((a / p_ + b / p_) % p_) * p_;
  }

  int neg(int a) const {
    check(a);
    if (deg_ == 1) return (p_ - a) % p_;
    return (p_ - a % p_) % p_ + ((p_ - a / p_) % p_) * p_;
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    check(a);
    check(b);
    if (deg_ == 1) return (a * b) % p_;
    int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    int c0 = (a0 * b0 + d_ * ((a1 * b1) % p_)) % p_;
    int c1 = (a0 * b1 + a1 * b0) % p_;
    return c0 + c1 * p_;
  }

  int inv(int a) const {
    check(a);
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw std::logic_error("field element without inverse");
  }

  int pow(int a, long long e) const {
    int r = 1;
    long long k = e % (q_ - 1);
    if (k < 0) k += q_ - 1;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    if (a == 0) throw std::invalid_argument("zero has no order");
    int r = a, ord = 1;
    while (r != 1) {
      r = mul(r, a);
      ++ord;
    }
    return ord;
  }

  // Smallest generator of the multiplicative group.
  int primitive_element() const {
    for (int a = 1; a < q_; ++a)
      if (element_order(a) == q_ - 1) return a;
    throw std::logic_error("no primitive element found");
  }

  bool is_square(int a) const {
    for (int b = 0; b < q_; ++b)
      if (mul(b, b) == a) return true;
    return false;
  }

  bool verify_axioms() const {
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
        for (int c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) return false;
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
        }
        if (add(a, neg(a)) != 0) return false;
        if (a != 0 && mul(a, inv(a)) != 1) return false;
      }
    return true;
  }

 private:
  Gf(int p, int deg) : p_(p), deg_(deg) {
    if (p < 2 || p > 31) throw std::invalid_argument("p out of range");
    for (int k = 2; k * k <= p; ++k)
      if (p % k == 0) throw std::invalid_argument("p is not prime");
    q_ = deg == 1 ? p : p * p;
    if (deg_ == 2) {
      if (p == 2)
        throw std::invalid_argument("x^2 - d is never irreducible over GF(2)");
      if (p > 7)
        throw std::invalid_argument(
            "quadratic extensions supported for p <= 7 only");
      // Least d with x^2 - d irreducible, i.e. the least non-residue.
      for (int d = 1; d < p; ++d) {
        bool square = false;
        for (int b = 0; b < p; ++b)
          if (b * b % p == d) square = true;
        if (!square) {
          d_ = d;
          break;
        }
      }
      if (d_ == 0) throw std::logic_error("no non-residue found");
    }
    if (!verify_axioms()) throw std::logic_error("field axioms failed");
  }

  void check(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("element out of range");
  }

  int p_;
  int deg_;
  int q_ = 0;
  int d_ = 0;
};

}  // namespace synckit
