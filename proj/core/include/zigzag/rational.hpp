#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zigzag {

// Arbitrary-precision integers and rationals. GMP keeps every mpq_class
// result in lowest terms with a positive denominator.
using BigInt = mpz_class;
using Rat = mpq_class;

// gcd(|num|, den) == 1 and den > 0.
bool is_canonical(const Rat& r);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow2(unsigned long e);

bool is_integer(const Rat& r);

// num/den in lowest terms; the two-argument mpq_class constructor does not
// reduce. Throws std::domain_error when den is zero.
Rat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);
std::string to_string(const Rat& r);

// Accepts "a" or "a/b" with optional sign. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

}  // namespace zigzag
