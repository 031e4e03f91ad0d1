#include "multisym/rational.hpp"

#include <stdexcept>

namespace multisym {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto digits_ok = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw std::invalid_argument("malformed rational literal: " + text);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= q;
  return out;
}

}  // namespace multisym
