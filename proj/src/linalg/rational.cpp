#include "opwork/linalg/rational.hpp"

#include <cctype>

namespace opwork {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("rational must have the form num/den: '" + std::string(text) + "'");
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  // leading zeros would break bit-exact round trips
  if ((num_digits.size() > 1 && num_digits.front() == '0') || (den.size() > 1 && den.front() == '0')) {
    throw std::invalid_argument("rational has leading zeros: '" + std::string(text) + "'");
  }
  if (num.front() == '-' && num_digits == "0") {
    throw std::invalid_argument("negative zero is not canonical: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("rational not in lowest terms: '" + std::string(text) + "'");
  }
  Rational q(n, d);
  return q;
}

}  // namespace opwork
