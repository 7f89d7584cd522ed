#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstddef>
#include <string>
#include <utility>

namespace goebel {

// Number of mantissa bits needed to carry `digits` significant decimal
// digits, plus a fixed safety margin for intermediate rounding.
mpfr_prec_t bits_for_digits(std::size_t digits);

// How a decimal rendering chooses between fixed-point and scientific
// notation.  `automatic` uses fixed point when the decimal exponent is
// moderate (between -4 and the number of significant digits) and
// scientific notation otherwise.
enum class RenderStyle { automatic, fixed_point, scientific };

// Thin RAII wrapper around an mpfr_t with an explicit precision.  All
// binary operators round to the larger precision of the two operands;
// unary functions keep their argument's precision.  Rounding mode is
// always round-to-nearest, so every individual operation is accurate to
// half an ulp of its result.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of_ui(unsigned long v, mpfr_prec_t prec);
  static Real of_si(long v, mpfr_prec_t prec);
  static Real of_double(double v, mpfr_prec_t prec);
  static Real of_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Real of_mpq(const mpq_class& v, mpfr_prec_t prec);
  // Parses a decimal string such as "1.0478314e0" or "-0.25".
  static Real of_str(const std::string& s, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  // Exponent e with |x| in [2^(e-1), 2^e); only valid for nonzero
  // finite values.
  mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }

  // One ulp of this value at its own precision, as a 64-bit Real.
  // Zero values report 0.
  Real ulp() const;

  // Deterministic decimal rendering with exactly `sig_digits`
  // significant digits (round-to-nearest), locale-independent.
  std::string to_decimal(std::size_t sig_digits,
                         RenderStyle style = RenderStyle::automatic) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real log(const Real& x);
Real exp(const Real& x);
Real log1p(const Real& x);
Real expm1(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow_ui(const Real& x, unsigned long e);
Real pow(const Real& base, const Real& e);
Real mul_z(const Real& x, const mpz_class& m);
Real div_z(const Real& x, const mpz_class& m);
Real div_ui(const Real& x, unsigned long m);
Real mul_2si(const Real& x, long e);  // exact scaling by 2^e
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

// log of an exact rational, computed at precision `prec`, together with
// an absolute error bound valid for the returned value.
std::pair<Real, Real> log_of_mpq(const mpq_class& q, mpfr_prec_t prec);

// A computed value together with a rigorous absolute error bound.  The
// bound is kept at low precision (64 bits) since it only needs an order
// of magnitude, but as an mpfr value it can go far below the smallest
// double.
struct HighPrecReal {
  Real value;
  Real err;

  HighPrecReal() : value(64), err(64) {}
  HighPrecReal(Real v, Real e) : value(std::move(v)), err(std::move(e)) {}

  std::string decimal(std::size_t sig_digits,
                      RenderStyle style = RenderStyle::automatic) const {
    return value.to_decimal(sig_digits, style);
  }

  // True when the two intervals value +/- err overlap, i.e. the results
  // are consistent as rigorous enclosures.
  bool consistent_with(const HighPrecReal& other) const;
};

}  // namespace goebel
