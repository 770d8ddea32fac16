#include "staircase/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace staircase {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = mpq_class(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    result = mpq_class(num, den);
    result.canonicalize();
  } else {
    if (!all_digits(body)) throw ParseError("malformed number '" + std::string(text) + "'");
    result = mpq_class(mpz_class(std::string(body), 10));
  }
  if (negative) result = -result;
  return result;
}

std::string format_scalar(const Scalar& value) {
  const mpz_class& den = value.get_den();
  if (den == 1) return value.get_num().get_str();

  mpz_class rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    rest /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return value.get_num().get_str() + "/" + den.get_str();

  const unsigned digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = abs(value.get_num()) * (scale / den);
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  if (value < 0) s.insert(0, "-");
  return s;
}

Scalar ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

long floor_to_long(const Scalar& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

long ceil_to_long(const Scalar& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

}  // namespace staircase
