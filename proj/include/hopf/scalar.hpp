#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hopf/errors.hpp"

namespace hopf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime, ratfun };

bool is_prime_u32(std::uint32_t n);

// Coefficient domain descriptor.  Scalars are self-describing; Field is
// what you hand to factories to mint constants in a chosen domain.
struct Field {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;  // modulus when kind == prime

  static Field rationals() { return Field{FieldKind::rationals, 0}; }
  static Field gf(std::uint32_t p);
  static Field rational_functions() { return Field{FieldKind::ratfun, 0}; }

  std::uint32_t characteristic() const { return kind == FieldKind::prime ? p : 0; }
  bool operator==(const Field&) const = default;
  std::string name() const;
};

// Dense univariate polynomial over Q.  Coefficients are stored low to
// high with no trailing zeros; zero is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const BigRat& c);
  explicit QPoly(std::vector<BigRat> coeffs);
  static QPoly variable();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& lead() const;
  BigRat coeff(int k) const;
  const std::vector<BigRat>& coeffs() const { return c_; }

  QPoly operator+(const QPoly&) const;
  QPoly operator-(const QPoly&) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly&) const;
  bool operator==(const QPoly&) const = default;

  // Exact division with remainder: *this = q * d + r, deg r < deg d.
  void divmod(const QPoly& d, QPoly& q, QPoly& r) const;
  QPoly divided_by(const QPoly& d) const;  // requires exact divisibility
  QPoly monic() const;
  BigRat eval(const BigRat& x) const;
  std::string str() const;

  friend QPoly gcd_monic(const QPoly& a, const QPoly& b);

 private:
  void trim();
  std::vector<BigRat> c_;
};

QPoly gcd_monic(const QPoly& a, const QPoly& b);

// One exact field element: a rational, a residue mod p, or a reduced
// rational function over Q.  Every arithmetic operation normalizes, so
// equality is plain representation equality.
class Scalar {
 public:
  Scalar() : v_(BigRat(0)) {}  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long long n);
  static Scalar from_rat(const Field& f, const BigRat& q);
  static Scalar variable(const Field& f);  // t in Q(t)
  static Scalar ratfun(QPoly num, QPoly den);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long long n) const;
  bool operator==(const Scalar&) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Evaluation homomorphism Q(t) -> Q at t = q; identity on Q scalars.
  Scalar eval_at(const BigRat& q) const;

  const BigRat& rational() const;
  std::uint64_t residue() const;
  const QPoly& num() const;
  const QPoly& den() const;

  std::string str() const;

 private:
  struct GFElem {
    std::uint64_t v;
    std::uint32_t p;
    bool operator==(const GFElem&) const = default;
  };
  struct RatFun {
    QPoly num, den;  // reduced, den monic
    bool operator==(const RatFun&) const = default;
  };
  explicit Scalar(BigRat q) : v_(std::move(q)) {}
  explicit Scalar(GFElem g) : v_(g) {}
  explicit Scalar(RatFun r) : v_(std::move(r)) {}
  void require_same_field(const Scalar& o) const;

  std::variant<BigRat, GFElem, RatFun> v_;
};

inline Scalar& operator+=(Scalar& a, const Scalar& b) { return a = a + b; }
inline Scalar& operator-=(Scalar& a, const Scalar& b) { return a = a - b; }
inline Scalar& operator*=(Scalar& a, const Scalar& b) { return a = a * b; }

}  // namespace hopf
