#include "kummerlab/bigint.hpp"

#include <cmath>
#include <limits>

#include "kummerlab/errors.hpp"

namespace kummerlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kValidation: return "ValidationError";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kMissingLevels: return "MissingLevels";
    case ErrorKind::kMissingLogValue: return "MissingLogValue";
    case ErrorKind::kInternal: return "InternalError";
  }
  return "Error";
}

MissingLevels::MissingLevels(std::uint64_t p)
    : Error(ErrorKind::kMissingLevels,
            "residue system cannot certify carry termination for prime " +
                std::to_string(p)),
      p_(p) {}

BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

BigInt big_from_i64(std::int64_t v) {
  if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
  // two's complement magnitude is safe for INT64_MIN
  BigInt r = big_from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1u);
  return -r;
}

BigInt parse_big(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ValidationError("malformed integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ValidationError("malformed integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof out, 0, 0, v.get_mpz_t());
  return count == 0 ? 0 : out;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

long double log_big(const BigInt& v) {
  if (sgn(v) <= 0) throw ValidationError("log of a nonpositive integer");
  if (auto small = to_u64(v)) return std::log(static_cast<long double>(*small));
  // top 64 bits carry more precision than a long double mantissa
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  const std::size_t shift = bits - 64;
  const BigInt top = v >> static_cast<mp_bitcnt_t>(shift);
  const long double mant = static_cast<long double>(*to_u64(top));
  return std::log(mant) + static_cast<long double>(shift) * std::log(2.0L);
}

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  if (m == 0) throw ValidationError("modulus must be positive");
  BigInt mm = big_from_u64(m);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  return *to_u64(r);
}

std::size_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace kummerlab
