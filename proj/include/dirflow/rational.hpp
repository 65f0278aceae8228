#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace dirflow {

// Exact rational scalar used throughout. Every correctness check compares
// with operator== on these; no floating point feeds them.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// mpq_class lacks long long constructors; 64-bit long covers this codebase.
inline Rational rat_ll(long long v) { return Rational((long)v); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Least common multiple of denominators, as an integer Rational.
inline mpz_class denominator_lcm(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_class d = v.get_den();
    l = lcm(l, d);
  }
  return l;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// First-order infinitesimal rational a + b*eps, compared lexicographically.
// Used where a predicate is stated "for all sufficiently small eps > 0".
struct EpsRational {
  Rational value;
  Rational eps;

  EpsRational() : value(0), eps(0) {}
  EpsRational(Rational v) : value(std::move(v)), eps(0) {}
  EpsRational(Rational v, Rational e) : value(std::move(v)), eps(std::move(e)) {}

  EpsRational operator+(const EpsRational& o) const {
    return {value + o.value, eps + o.eps};
  }
  EpsRational operator-(const EpsRational& o) const {
    return {value - o.value, eps - o.eps};
  }
  bool operator==(const EpsRational& o) const {
    return value == o.value && eps == o.eps;
  }
  bool operator<(const EpsRational& o) const {
    if (value != o.value) return value < o.value;
    return eps < o.eps;
  }
  bool operator<=(const EpsRational& o) const { return *this < o || *this == o; }
  bool operator>(const EpsRational& o) const { return o < *this; }
  bool operator>=(const EpsRational& o) const { return o <= *this; }
};

inline EpsRational eps_max(const EpsRational& a, const EpsRational& b) {
  return a < b ? b : a;
}

}  // namespace dirflow
