#include "egamma/reference.hpp"

#include <cstring>
#include <string>

namespace egamma {

const Rational& reference_value() {
  static const Rational value = [] {
    std::string digits(kReferenceDigits);
    std::string frac = digits.substr(digits.find('.') + 1);
    BigInt num(frac, 10);
    return make_rational(num, pow10(frac.size()));
  }();
  return value;
}

}  // namespace egamma
