#ifndef DYNRES_RATIONAL_HPP
#define DYNRES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "dynres/errors.hpp"

namespace dynres {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& v) {
  Int num = numerator(v), den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw math_error("rational with zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace dynres

#endif
