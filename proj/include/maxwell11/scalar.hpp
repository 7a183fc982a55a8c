#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace mx11 {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" in base 10. Rejects anything else, in
/// particular floating-point syntax: lightlike constraints cannot be
/// certified from floats.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Exact complex scalar a + b*i with rational a, b. Ground field for every
/// matrix in the representation; all arithmetic is exact, equality is
/// decidable.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(int n) : re(n), im(0) {}  // NOLINT: implicit by design
  ComplexRational(long n) : re(n), im(0) {}  // NOLINT
  ComplexRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  ComplexRational conjugate() const { return {re, -im}; }

  /// re^2 + im^2, exact.
  Rational norm2() const { return re * re + im * im; }

  // The representation matrices are sparse in a dense container; the zero
  // and purely-real shortcuts below skip most of the gmp canonicalization
  // work in matrix products.
  ComplexRational& operator+=(const ComplexRational& o) {
    if (sgn(o.re) != 0) re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    if (sgn(o.re) != 0) re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    const bool a_im = sgn(im) != 0;
    const bool b_im = sgn(o.im) != 0;
    if (!a_im && !b_im) {
      if (sgn(re) != 0) re *= o.re;
      return *this;
    }
    if (!b_im) {  // complex * real
      re *= o.re;
      im *= o.re;
      return *this;
    }
    if (!a_im) {  // real * complex
      if (sgn(re) == 0) return *this;
      im = re * o.im;
      re *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    if (o.is_zero()) throw std::domain_error("ComplexRational: division by zero");
    Rational n = o.norm2();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }
};

inline ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
inline ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
inline ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
inline ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
inline ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
inline bool operator==(const ComplexRational& a, const ComplexRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

// Adapters Eigen resolves through ADL.
inline ComplexRational conj(const ComplexRational& z) { return z.conjugate(); }
inline Rational real(const ComplexRational& z) { return z.re; }
inline Rational imag(const ComplexRational& z) { return z.im; }
inline Rational abs2(const ComplexRational& z) { return z.norm2(); }

ComplexRational parse_complex(const std::string& re, const std::string& im);
std::string to_string(const ComplexRational& z);

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

}  // namespace mx11

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Literal;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mx11::ComplexRational> : GenericNumTraits<mx11::ComplexRational> {
  typedef mpq_class Real;
  typedef mx11::ComplexRational NonInteger;
  typedef mx11::ComplexRational Literal;
  typedef mx11::ComplexRational Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 300,
    MulCost = 800
  };
};

}  // namespace Eigen
