#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fixedloci {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

IntVec make_int_vec(std::initializer_list<long> values);
RatVec make_rat_vec(std::initializer_list<long> values);

RatVec to_rational(const IntVec& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Gcd of all entries (0 for the zero vector).
Integer content(const IntVec& v);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
bool is_primitive(const IntVec& v);

/// Divides out the content. The zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

/// Smallest positive multiple of a rational vector that is integral,
/// divided by its content. Direction is preserved.
IntVec primitive(const RatVec& v);

Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const IntVec& a, const RatVec& b);

IntVec negate(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Integer& s, const IntVec& v);

std::int64_t to_int64(const Integer& x);
bool fits_int64(const Integer& x);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace fixedloci
