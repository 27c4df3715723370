#include "kummerlab/factored.hpp"

#include <cmath>

#include "kummerlab/errors.hpp"
#include "kummerlab/modular.hpp"
#include "kummerlab/primes.hpp"

namespace kummerlab {

BigInt PrimePower::value() const {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), p, a);
  return v;
}

std::optional<std::uint64_t> PrimePower::value_u64() const {
  return checked_pow(p, a);
}

PrimePower make_prime_power(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (a < 1) throw ValidationError("prime power exponent must be >= 1");
  return {p, a};
}

FactoredNat::FactoredNat(Map factors) : factors_(std::move(factors)) {
  for (const auto& [p, e] : factors_) {
    if (e == 0) throw ValidationError("FactoredNat exponent 0 at " + std::to_string(p));
    if (!is_prime(p)) throw ValidationError("FactoredNat key " + std::to_string(p) + " is not prime");
  }
}

unsigned FactoredNat::exponent(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

BigInt FactoredNat::to_integer() const {
  BigInt v = 1;
  BigInt pe;
  for (const auto& [p, e] : factors_) {
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    v *= pe;
  }
  return v;
}

long double FactoredNat::log() const {
  long double s = 0;
  for (const auto& [p, e] : factors_) s += e * std::log(static_cast<long double>(p));
  return s;
}

std::uint64_t FactoredNat::residue(std::uint64_t m) const {
  if (m == 0) throw ValidationError("modulus must be positive");
  std::uint64_t r = 1 % m;
  for (const auto& [p, e] : factors_) r = mul_mod(r, pow_mod(p, e, m), m);
  return r;
}

std::string FactoredNat::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : factors_) {
    if (!s.empty()) s += '*';
    s += std::to_string(p);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

FactoredNat FactoredNat::parse(std::string_view text) {
  Map m;
  if (text == "1") return FactoredNat{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) throw ValidationError("malformed factorization");
    std::size_t caret = term.find('^');
    try {
      const std::uint64_t p = std::stoull(std::string(term.substr(0, caret)));
      const unsigned e = caret == std::string_view::npos
                             ? 1u
                             : static_cast<unsigned>(std::stoul(std::string(term.substr(caret + 1))));
      if (!m.emplace(p, e).second) throw ValidationError("repeated prime in factorization");
    } catch (const std::logic_error&) {
      throw ValidationError("malformed factorization: " + std::string(text));
    }
    pos = end + 1;
  }
  return FactoredNat(std::move(m));
}

FactoredNat operator*(const FactoredNat& x, const FactoredNat& y) {
  FactoredNat out = x;
  for (const auto& [p, e] : y.factors_) out.factors_[p] += e;
  return out;
}

FactoredNat factor_nat(std::uint64_t n) {
  FactoredNat::Map m;
  for (const auto& [p, e] : factor_u64(n)) m.emplace(p, e);
  return FactoredNat(std::move(m));
}

}  // namespace kummerlab
