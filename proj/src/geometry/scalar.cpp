#include "equilib/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace equilib {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Scalar pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Scalar(p);
  return Scalar(mpz_class(1), p);
}

Scalar parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool eneg = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      eneg = exp[0] == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) throw std::invalid_argument("bad exponent");
    exponent = std::stol(std::string(exp));
    if (eneg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("bad number");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("bad number");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad number");
    digits = std::string(s);
  }
  Scalar v(mpz_class(digits, 10));
  v *= pow10(exponent);
  v.canonicalize();
  return neg ? Scalar(-v) : v;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
      neg = num[0] == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("bad fraction");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator");
    Scalar q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return neg ? Scalar(-q) : q;
  }
  return parse_decimal(text);
}

std::string to_string(const Scalar& x) {
  Scalar c(x);
  c.canonicalize();
  return c.get_str(10);
}

std::string to_decimal(const Scalar& x, int digits) {
  mpf_class f(x, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<size_t>(digits));
  if (mant.empty() || mant == "0") return "0";
  bool neg = mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else if (static_cast<size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
  }
  return neg ? "-" + out : out;
}

Scalar from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return Scalar(x);
}

Scalar floor_q(const Scalar& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Scalar(q);
}

// Stern-Brocot style search: walk the continued fraction of x and return the
// first convergent or semiconvergent inside [x - tol, x + tol].
Scalar rationalize(const Scalar& x, const Scalar& tol) {
  if (tol <= 0) return x;
  Scalar lo = x - tol, hi = x + tol;
  if (lo <= 0 && hi >= 0) return Scalar(0);
  bool neg = x < 0;
  if (neg) {
    Scalar t = -hi;
    hi = -lo;
    lo = t;
  }
  // simplest rational in [lo, hi], lo > 0
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Scalar a = lo, b = hi;
  for (int guard = 0; guard < 4096; ++guard) {
    Scalar fa = floor_q(a);
    if (fa + 1 <= b || fa == a) {
      // an integer lies in [a, b]
      mpz_class k = fa.get_num();
      if (fa != a) k += 1;
      mpz_class p = k * p1 + p0, q = k * q1 + q0;
      Scalar r(p, q);
      r.canonicalize();
      return neg ? Scalar(-r) : r;
    }
    mpz_class k = fa.get_num();
    mpz_class p2 = k * p1 + p0, q2 = k * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Scalar na = 1 / (b - fa), nb = 1 / (a - fa);
    a = na;
    b = nb;
  }
  return neg ? Scalar(-x) : x;
}

Scalar rationalize(double x, double tol) { return rationalize(from_double(x), from_double(tol)); }

const Scalar& pi_rational() {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239), summed exactly to 1e-32.
  static const Scalar pi = [] {
    auto atan_inv = [](long n) {
      Scalar x(1, n), x2 = x * x, term = x, sum = 0;
      Scalar eps(1);
      eps /= Scalar(mpz_class("100000000000000000000000000000000"));
      for (long k = 0;; ++k) {
        Scalar t = term / (2 * k + 1);
        if (k % 2 == 0)
          sum += t;
        else
          sum -= t;
        if (abs(t) < eps) break;
        term *= x2;
      }
      return sum;
    };
    Scalar v = 16 * atan_inv(5) - 4 * atan_inv(239);
    Scalar tol(1);
    tol /= Scalar(mpz_class("1000000000000000000000000000000"));
    return rationalize(v, tol);
  }();
  return pi;
}

namespace {

Scalar taylor(const Scalar& x, bool sine) {
  Scalar eps(1);
  eps /= Scalar(mpz_class("1000000000000000000000000000000"));
  Scalar x2 = x * x;
  Scalar term = sine ? x : Scalar(1);
  Scalar sum = term;
  for (long k = sine ? 1 : 0;; ++k) {
    long a = sine ? 2 * k : 2 * k + 1, b = sine ? 2 * k + 1 : 2 * k + 2;
    term *= -x2;
    term /= a * b;
    sum += term;
    if (abs(term) < eps) break;
  }
  // keep the numbers small: nothing downstream needs more than 1e-30
  return rationalize(sum, eps);
}

}  // namespace

Scalar sin_rational(const Scalar& x) { return taylor(x, true); }
Scalar cos_rational(const Scalar& x) { return taylor(x, false); }

}  // namespace equilib
