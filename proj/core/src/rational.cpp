#include "apx/rational.hpp"

#include <cctype>
#include <limits>

#include "apx/errors.hpp"

namespace apx {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("rational with zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") {
      int_part = "0";
    }
    if (frac_part.empty()) throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    mpz_class whole = parse_integer(int_part, text);
    mpz_class frac = parse_integer(frac_part, text);
    if (frac_part[0] == '-' || frac_part[0] == '+') {
      throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational r(frac, scale);
    r.canonicalize();
    Rational w(whole < 0 ? -whole : whole);
    Rational value = w + r;
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text, text));
}

double to_double(const Rational& r) { return r.get_d(); }

std::int64_t floor_to_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InvalidArgument("rational floor out of 64-bit range");
  return static_cast<std::int64_t>(q.get_si());
}

Rational fractional_part(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return r - Rational(q);
}

}  // namespace apx
