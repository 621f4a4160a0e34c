#ifndef AWIN_RATIONAL_HPP
#define AWIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace awin {

// Exact arithmetic scalar. mpq_class keeps the canonical form the counting
// relies on: positive denominator, gcd(|num|, den) = 1.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p/q", a decimal string like "-3.25", or a plain integer string,
/// all exactly. Throws ParseError on anything else.
Rat rat_from_string(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

Int rat_floor(const Rat& value);
Int rat_ceil(const Rat& value);

struct Pt {
  Rat x, y;

  Pt() = default;
  Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Pt(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
  friend Pt operator+(const Pt& a, const Pt& b) { return Pt(a.x + b.x, a.y + b.y); }
  friend Pt operator-(const Pt& a, const Pt& b) { return Pt(a.x - b.x, a.y - b.y); }
};

std::string pt_to_string(const Pt& p);

}  // namespace awin

#endif
