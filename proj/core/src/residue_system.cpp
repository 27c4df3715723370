#include "kummerlab/residue_system.hpp"

#include "kummerlab/errors.hpp"

namespace kummerlab {

namespace {

BigInt reduce(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

ResidueSystem ResidueSystem::from_integer(
    const BigInt& n, const std::map<std::uint64_t, unsigned>& levels) {
  if (sgn(n) < 0) throw ValidationError("residue system of a negative integer");
  ResidueSystem rs;
  for (const auto& [p, top] : levels) {
    for (unsigned a = 1; a <= top; ++a) {
      const PrimePower pp = make_prime_power(p, a);
      rs.entries_.emplace(pp, reduce(n, pp.value()));
    }
  }
  if (sgn(n) > 0) rs.log_value_ = log_big(n);
  return rs;
}

void ResidueSystem::set(PrimePower level, const BigInt& residue) {
  level = make_prime_power(level.p, level.a);
  const BigInt q = level.value();
  if (sgn(residue) < 0 || residue >= q) {
    throw ValidationError("residue out of range at " + std::to_string(level.p) +
                          "^" + std::to_string(level.a));
  }
  for (auto it = entries_.lower_bound({level.p, 1});
       it != entries_.end() && it->first.p == level.p; ++it) {
    const auto& [other, r] = *it;
    if (other.a == level.a) continue;
    const bool ok = other.a < level.a ? reduce(residue, other.value()) == r
                                      : reduce(r, q) == residue;
    if (!ok) {
      throw ValidationError("incoherent residues for prime " + std::to_string(level.p));
    }
  }
  entries_[level] = residue;
}

unsigned ResidueSystem::max_level(std::uint64_t p) const {
  auto it = entries_.upper_bound({p, ~0u});
  if (it == entries_.begin()) return 0;
  --it;
  return it->first.p == p ? it->first.a : 0;
}

std::optional<BigInt> ResidueSystem::residue(std::uint64_t p, unsigned a) const {
  auto it = entries_.lower_bound({p, a});
  if (it == entries_.end() || it->first.p != p) return std::nullopt;
  if (it->first.a == a) return it->second;
  return reduce(it->second, PrimePower{p, a}.value());
}

std::vector<std::uint64_t> ResidueSystem::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [pp, r] : entries_) {
    if (out.empty() || out.back() != pp.p) out.push_back(pp.p);
  }
  return out;
}

bool ResidueSystem::coherent() const {
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    for (auto jt = std::next(it); jt != entries_.end() && jt->first.p == it->first.p; ++jt) {
      if (reduce(jt->second, it->first.value()) != it->second) return false;
    }
  }
  return true;
}

void ResidueSystem::set_log_value(long double v) {
  if (!(v >= 0)) throw ValidationError("log_value must be >= 0");
  log_value_ = v;
}

}  // namespace kummerlab
