#ifndef LSA_RATIONAL_HPP
#define LSA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lsa
{

  /// Exact rational scalar. cpp_rational keeps lowest terms with a positive
  /// denominator after every operation, which is the invariant we rely on.
  using Integer = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  inline Integer numer(const Rational & q) { return boost::multiprecision::numerator(q); }
  inline Integer denom(const Rational & q) { return boost::multiprecision::denominator(q); }

  inline std::string to_string(const Rational & q)
  {
    return q.str();
  }

}

#endif
