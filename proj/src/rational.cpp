#include "mgp/rational.hpp"

#include <stdexcept>

namespace mgp {

Rat make_rat(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

namespace {

// Strict integer literal: optional sign followed by at least one digit.
// GMP's own string parser skips whitespace, which is too lax here.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
  }
  return Int(std::string(s));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rat r(parse_int(text));
    return r;
  }
  return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rat rat_pow(const Rat& base, unsigned long e) {
  if (e == 0) {
    return Rat(1);
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  // num/den already coprime, so the power is canonical too.
  return out;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace mgp
