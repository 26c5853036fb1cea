#include "scord/cnf.hpp"

#include <cctype>

namespace scord {

Cnf cnf_add(const Cnf& a, const Cnf& b) {
  if (b.is_finite()) {
    Cnf out = a;
    out.remainder += b.remainder;
    return out;
  }
  Cnf out;
  std::uint32_t lead = b.terms.front().first;
  for (const auto& t : a.terms) {
    if (t.first > lead) out.terms.push_back(t);
  }
  std::size_t boundary = out.terms.size();
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  for (const auto& t : a.terms) {
    if (t.first == lead) {
      out.terms[boundary].second += t.second;
      break;
    }
  }
  out.remainder = b.remainder;
  return out;
}

Cnf cnf_times_omega(const Cnf& a) {
  if (a.is_zero()) return a;
  return Cnf::omega_power(a.degree() + 1);
}

int cnf_compare(const Cnf& a, const Cnf& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms[i].first != b.terms[i].first)
      return a.terms[i].first < b.terms[i].first ? -1 : 1;
    if (a.terms[i].second != b.terms[i].second)
      return a.terms[i].second < b.terms[i].second ? -1 : 1;
  }
  if (a.terms.size() != b.terms.size())
    return a.terms.size() < b.terms.size() ? -1 : 1;
  if (a.remainder != b.remainder) return a.remainder < b.remainder ? -1 : 1;
  return 0;
}

std::string to_string(const Cnf& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : a.terms) {
    if (!out.empty()) out += "+";
    out += e == 1 ? "w" : "w^" + std::to_string(e);
    if (c != 1) out += "." + std::to_string(c);
  }
  if (a.remainder) {
    if (!out.empty()) out += "+";
    out += std::to_string(a.remainder);
  }
  return out;
}

namespace {

struct CnfParser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::uint64_t nat() {
    skip();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected a number", i);
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > (1ull << 40)) throw parse_error("number too large", i);
      ++i;
    }
    return v;
  }
  Cnf component() {
    skip();
    if (i < s.size() && (s[i] == 'w' || s[i] == 'W')) {
      ++i;
      std::uint64_t exp = 1;
      if (eat('^')) exp = nat();
      std::uint64_t coeff = 1;
      if (eat('.')) coeff = nat();
      if (exp == 0) return Cnf::finite(coeff);
      if (exp > 64) throw parse_error("exponent too large", i);
      if (coeff == 0) return Cnf::finite(0);
      return Cnf::omega_power(static_cast<std::uint32_t>(exp), coeff);
    }
    return Cnf::finite(nat());
  }
  Cnf parse() {
    Cnf v = component();
    while (true) {
      skip();
      if (i >= s.size()) break;
      if (!eat('+')) throw parse_error("expected '+'", i);
      v = cnf_add(v, component());
    }
    return v;
  }
};

}  // namespace

Cnf parse_cnf(const std::string& text) {
  CnfParser p{text};
  return p.parse();
}

std::optional<Cnf> ord_value(const HTerm& t) {
  if (!t.omega_star_free()) return std::nullopt;
  if (t.is_singleton()) return Cnf::finite(1);
  Cnf head_sum = Cnf::finite(0);
  for (const auto& h : t.head()) head_sum = cnf_add(head_sum, *ord_value(h));
  Cnf pattern_sum = Cnf::finite(0);
  for (const auto& p : t.pattern()) pattern_sum = cnf_add(pattern_sum, *ord_value(p));
  return cnf_add(head_sum, cnf_times_omega(pattern_sum));
}

std::optional<Cnf> ord_value(const Term& t) {
  if (!t.omega_star_free()) return std::nullopt;
  Cnf v = Cnf::finite(0);
  for (const auto& p : t.parts()) v = cnf_add(v, *ord_value(p));
  return v;
}

}  // namespace scord
