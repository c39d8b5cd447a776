#include "tilab/index_value.hpp"

#include <cctype>

#include "tilab/errors.hpp"

namespace tilab {

IndexValue::IndexValue(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  // cpp_rational rejects a negative denominator.
  value_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

IndexValue& IndexValue::operator/=(const IndexValue& o) {
  if (o.value_ == 0) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string IndexValue::to_string() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

IndexValue IndexValue::parse(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw InvalidArgument("not an exact value: " + text);
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw InvalidArgument("not an exact value: " + text);
      }
    }
    return BigInt(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return IndexValue(parse_int(text));
  return IndexValue(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
}

IndexValue power(const IndexValue& base, std::uint64_t exponent) {
  BigRational result = 1;
  BigRational b = base.rational();
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return IndexValue(result);
}

}  // namespace tilab
