#include "erlab/rational.hpp"

#include "erlab/errors.hpp"

namespace erlab {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt q(text.substr(slash + 1));
    if (q == 0) throw ParameterError("zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), q);
  } catch (const std::runtime_error&) {
    throw ParameterError("not a rational: '" + text + "'");
  }
}

}  // namespace erlab
