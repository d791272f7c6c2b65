#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace treespace {

// All scalar arithmetic in the library is exact. Rat is an arbitrary
// precision fraction kept in lowest terms with positive denominator.
using Rat = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 2^k for any integer k (k may be negative).
Rat pow2(long k);

// Parses "p/q" or "p" with optional sign. Throws ParseError on anything else.
Rat parse_rat(const std::string& text);

std::optional<Rat> try_parse_rat(const std::string& text);

// Canonical "p/q" rendering; whole numbers print with denominator 1,
// so the zero vector norm reads "0/1".
std::string rat_string(const Rat& q);

// Decimal approximation used only for human-readable report columns.
std::string rat_approx(const Rat& q);

}  // namespace treespace
