#include "goebel/real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace goebel {

mpfr_prec_t bits_for_digits(std::size_t digits) {
  // log2(10) = 3.3219...; round up and add headroom so that rendering
  // `digits` decimal digits never exposes the binary rounding boundary.
  double bits = static_cast<double>(digits) * 3.3219280948873623 + 16.0;
  return static_cast<mpfr_prec_t>(std::ceil(bits));
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of_ui(unsigned long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_si(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_double(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of_str(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real::of_str: unparsable number '" + s + "'");
  return r;
}

Real Real::ulp() const {
  Real u(64);
  if (is_zero() || !is_finite()) {
    mpfr_set_zero(u.v_, 1);
    return u;
  }
  mpfr_set_ui_2exp(u.v_, 1, exponent() - prec(), MPFR_RNDN);
  return u;
}

std::string Real::to_decimal(std::size_t sig_digits, RenderStyle style) const {
  if (sig_digits == 0) sig_digits = 1;
  if (is_nan()) return "nan";
  if (!is_finite()) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  mpfr_exp_t e = 0;
  char* buf = mpfr_get_str(nullptr, &e, 10, sig_digits, v_, MPFR_RNDN);
  std::string digits(buf);
  mpfr_free_str(buf);

  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  // Value is now +/- 0.<digits> * 10^e.

  bool fixed = false;
  switch (style) {
    case RenderStyle::fixed_point:
      fixed = true;
      break;
    case RenderStyle::scientific:
      fixed = false;
      break;
    case RenderStyle::automatic:
      fixed = e > -5 && e <= static_cast<mpfr_exp_t>(sig_digits);
      break;
  }

  std::string out = neg ? "-" : "";
  if (fixed) {
    if (e <= 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-e), '0');
      out += digits;
    } else if (static_cast<std::size_t>(e) >= digits.size()) {
      out += digits;
      out.append(static_cast<std::size_t>(e) - digits.size(), '0');
    } else {
      out += digits.substr(0, static_cast<std::size_t>(e));
      out += '.';
      out += digits.substr(static_cast<std::size_t>(e));
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += '.';
      out += digits.substr(1);
    }
    mpfr_exp_t ee = e - 1;
    out += 'e';
    out += ee < 0 ? '-' : '+';
    out += std::to_string(ee < 0 ? -ee : ee);
  }
  return out;
}

static mpfr_prec_t wider(const Real& a, const Real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

Real& Real::operator+=(const Real& rhs) {
  mpfr_add(v_, v_, rhs.raw(), MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  mpfr_sub(v_, v_, rhs.raw(), MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  mpfr_mul(v_, v_, rhs.raw(), MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  mpfr_div(v_, v_, rhs.raw(), MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) {
  return mpfr_cmp(a.raw(), b.raw()) < 0;
}
bool operator>(const Real& a, const Real& b) {
  return mpfr_cmp(a.raw(), b.raw()) > 0;
}
bool operator<=(const Real& a, const Real& b) {
  return mpfr_cmp(a.raw(), b.raw()) <= 0;
}
bool operator>=(const Real& a, const Real& b) {
  return mpfr_cmp(a.raw(), b.raw()) >= 0;
}
bool operator==(const Real& a, const Real& b) {
  return mpfr_cmp(a.raw(), b.raw()) == 0;
}
bool operator!=(const Real& a, const Real& b) {
  return mpfr_cmp(a.raw(), b.raw()) != 0;
}

#define GOEBEL_UNARY(fname, mpfrname)          \
  Real fname(const Real& x) {                  \
    Real r(x.prec());                          \
    mpfrname(r.raw(), x.raw(), MPFR_RNDN);     \
    return r;                                  \
  }

GOEBEL_UNARY(log, mpfr_log)
GOEBEL_UNARY(exp, mpfr_exp)
GOEBEL_UNARY(log1p, mpfr_log1p)
GOEBEL_UNARY(expm1, mpfr_expm1)
GOEBEL_UNARY(sqrt, mpfr_sqrt)
GOEBEL_UNARY(abs, mpfr_abs)
#undef GOEBEL_UNARY

Real pow_ui(const Real& x, unsigned long e) {
  Real r(x.prec());
  mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& e) {
  Real r(wider(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real mul_z(const Real& x, const mpz_class& m) {
  Real r(x.prec());
  mpfr_mul_z(r.raw(), x.raw(), m.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real div_z(const Real& x, const mpz_class& m) {
  Real r(x.prec());
  mpfr_div_z(r.raw(), x.raw(), m.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real div_ui(const Real& x, unsigned long m) {
  Real r(x.prec());
  mpfr_div_ui(r.raw(), x.raw(), m, MPFR_RNDN);
  return r;
}

Real mul_2si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

std::pair<Real, Real> log_of_mpq(const mpq_class& q, mpfr_prec_t prec) {
  if (sgn(q) <= 0)
    throw std::domain_error("log_of_mpq: argument must be positive");
  Real ln(prec), lnum(prec), lden(prec);
  mpfr_set_z(lnum.raw(), q.get_num().get_mpz_t(), MPFR_RNDN);
  mpfr_log(lnum.raw(), lnum.raw(), MPFR_RNDN);
  mpfr_set_z(lden.raw(), q.get_den().get_mpz_t(), MPFR_RNDN);
  mpfr_log(lden.raw(), lden.raw(), MPFR_RNDN);
  mpfr_sub(ln.raw(), lnum.raw(), lden.raw(), MPFR_RNDN);
  // Each of the two correctly rounded logs carries at most one ulp of
  // error relative to the exact logarithm of the rounded integer input
  // (the integers themselves are exact for |z| < 2^prec; above that the
  // input rounding adds a relative 2^-prec to z, i.e. an absolute
  // 2^-prec to log z).  The subtraction adds half an ulp of the result.
  // Bounding ulps by |value| * 2^(1-prec) and adding a absolute floor
  // of 2^(1-prec) covers every case with a wide margin.
  Real err = (abs(lnum) + abs(lden) + abs(ln) + Real::of_ui(1, 64)) *
             mul_2si(Real::of_ui(1, 64), 2 - static_cast<long>(prec));
  return {std::move(ln), std::move(err)};
}

bool HighPrecReal::consistent_with(const HighPrecReal& other) const {
  Real gap = abs(value - other.value);
  return gap <= err + other.err;
}

}  // namespace goebel
