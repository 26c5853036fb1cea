#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scord/term.hpp"

namespace scord {

// Cantor normal form below w^w: sum of w^exp * coeff terms with strictly
// decreasing exponents >= 1, plus a finite remainder.
struct Cnf {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;
  std::uint64_t remainder = 0;

  static Cnf finite(std::uint64_t k) { return Cnf{{}, k}; }
  static Cnf omega_power(std::uint32_t exp, std::uint64_t coeff = 1) {
    if (exp == 0) return finite(coeff);
    return Cnf{{{exp, coeff}}, 0};
  }
  bool is_zero() const { return terms.empty() && remainder == 0; }
  bool is_finite() const { return terms.empty(); }
  std::uint32_t degree() const { return terms.empty() ? 0 : terms.front().first; }

  bool operator==(const Cnf& o) const {
    return terms == o.terms && remainder == o.remainder;
  }
};

// Ordinal addition: terms of the left operand below the leading exponent of
// the right operand are absorbed.
Cnf cnf_add(const Cnf& a, const Cnf& b);

// Right multiplication by w; s*w collapses to w^(degree+1) for s >= 1.
Cnf cnf_times_omega(const Cnf& a);

int cnf_compare(const Cnf& a, const Cnf& b);
inline bool cnf_leq(const Cnf& a, const Cnf& b) { return cnf_compare(a, b) <= 0; }

std::string to_string(const Cnf& a);

// component ("+" component)*, component := "w" ["^" NAT] ["." NAT] | NAT,
// summed left to right with ordinal addition (so "w+w^2" normalizes to w^2).
Cnf parse_cnf(const std::string& text);

// Ordinal value of an omega-star-free term; nullopt when any OmegaStarSum
// occurs. An OmegaSum contributes head-sum + pattern-sum * w.
std::optional<Cnf> ord_value(const HTerm& t);
std::optional<Cnf> ord_value(const Term& t);

}  // namespace scord
