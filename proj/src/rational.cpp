#include "awin/rational.hpp"

#include <cctype>

#include "awin/errors.hpp"

namespace awin {

namespace {

bool is_integer_literal(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty number literal");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw ParseError("bad rational literal '" + text + "'");
    Rat r;
    if (r.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_literal(head) || frac.empty() || !is_integer_literal(frac) ||
        frac[0] == '-' || frac[0] == '+')
      throw ParseError("bad decimal literal '" + text + "'");
    bool negative = head[0] == '-';
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int whole(head, 10);
    Int frac_digits(frac, 10);
    Int numerator = whole * scale + (negative ? -frac_digits : frac_digits);
    Rat r(numerator, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_literal(text)) throw ParseError("bad number literal '" + text + "'");
  Rat r;
  if (r.set_str(text, 10) != 0) throw ParseError("bad number literal '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

Int rat_floor(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

std::string pt_to_string(const Pt& p) {
  return "(" + rat_to_string(p.x) + ", " + rat_to_string(p.y) + ")";
}

}  // namespace awin
