#include "fixedloci/numeric.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace fixedloci {

IntVec make_int_vec(std::initializer_list<long> values) {
  IntVec out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

RatVec make_rat_vec(std::initializer_list<long> values) {
  RatVec out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_primitive(const IntVec& v) { return content(v) == 1; }

IntVec primitive(const IntVec& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec primitive(const RatVec& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, boost::multiprecision::denominator(x));
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * den;
    out[i] = boost::multiprecision::numerator(scaled);
  }
  return primitive(out);
}

Integer dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec scale(const Integer& s, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw std::overflow_error("integer does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace fixedloci
