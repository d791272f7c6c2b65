#include "rational.hpp"

#include <cctype>
#include <cstdio>

namespace treespace {

Rat pow2(long k) {
  mpz_class num = 1, den = 1;
  if (k >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return Rat(num, den);
}

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> try_parse_rat(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer(num) || !valid_integer(den)) return std::nullopt;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  auto q = try_parse_rat(text);
  if (!q) throw ParseError("invalid rational '" + text + "'");
  return *q;
}

std::string rat_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_approx(const Rat& q) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", q.get_d());
  return buf;
}

}  // namespace treespace
