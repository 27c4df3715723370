#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kummerlab {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt big_from_u64(std::uint64_t v);
BigInt big_from_i64(std::int64_t v);

/// Parses a base-10 integer (optional leading '-'); throws ValidationError.
BigInt parse_big(std::string_view text);

std::optional<std::uint64_t> to_u64(const BigInt& v);
std::string to_decimal(const BigInt& v);

/// Natural logarithm of a positive integer, correct to long double precision
/// for integers of any size.
long double log_big(const BigInt& v);

/// v mod m for a 64-bit modulus, result in [0, m).
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

std::size_t bit_length(const BigInt& v);

}  // namespace kummerlab
