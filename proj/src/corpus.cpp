#include "scord/corpus.hpp"

#include <utility>
#include <vector>

namespace scord {

std::uint64_t Corpus::pick(std::uint64_t n) { return rng_() % n; }

HTerm Corpus::hterm(unsigned depth, bool allow_star) {
  if (depth == 0 || pick(10) < 3) return HTerm::singleton();

  std::vector<HTerm> pattern;
  const std::uint64_t psz = 1 + pick(3);
  for (std::uint64_t i = 0; i < psz; ++i) pattern.push_back(hterm(depth - 1, allow_star));

  std::vector<HTerm> head;
  const std::uint64_t hsz = pick(3);
  for (std::uint64_t i = 0; i < hsz; ++i)
    head.push_back(pick(10) < 7 ? HTerm::singleton() : pattern[pick(psz)]);

  if (allow_star && pick(2) == 0)
    return HTerm::omega_star_sum(std::move(pattern), std::move(head));
  return HTerm::omega_sum(std::move(head), std::move(pattern));
}

Term Corpus::term(unsigned depth, unsigned max_parts, bool allow_star) {
  std::vector<HTerm> parts;
  const std::uint64_t n = 1 + pick(max_parts);
  for (std::uint64_t i = 0; i < n; ++i) parts.push_back(hterm(depth, allow_star));
  return Term(std::move(parts));
}

Term Corpus::small_ordinal_term() {
  for (;;) {
    Term t = term(3, 3, false);
    const auto v = ord_value(t);
    if (!v || v->degree() > 3 || v->remainder > 3) continue;
    bool small = true;
    for (const auto& [exp, coeff] : v->terms)
      if (coeff > 3) small = false;
    if (small) return t;
  }
}

SubsetSpec Corpus::spec(const HTerm& node) {
  if (node.is_singleton()) return pick(2) ? SubsetSpec::full() : SubsetSpec::empty();
  const std::uint64_t roll = pick(10);
  if (roll < 2) return SubsetSpec::full();
  if (roll < 4) return SubsetSpec::empty();

  const std::uint64_t h = node.head().size();
  const std::uint64_t p = node.pattern().size();
  SumSpec ss;
  ss.tail = static_cast<TailMode>(pick(3));
  const std::uint64_t L = p * (1 + pick(2));
  const std::uint64_t ts = h + (ss.tail == TailMode::Periodic ? pick(2) * L : pick(4));
  for (std::uint64_t i = 0; i < ts; ++i)
    if (pick(2)) ss.entries.emplace(i, spec(node.summand(i)));
  // A periodic tail must start at or past the head; pin it there.
  if (ss.tail == TailMode::Periodic) {
    if (ts > 0 && !ss.entries.count(ts - 1)) ss.entries.emplace(ts - 1, spec(node.summand(ts - 1)));
    for (std::uint64_t j = 0; j < L; ++j) ss.periodic.push_back(spec(node.summand(h + j)));
  }
  return SubsetSpec::sum(std::move(ss));
}

SubsetSpec Corpus::spec(const Term& t) {
  const std::uint64_t roll = pick(10);
  if (roll == 0) return SubsetSpec::full();
  if (roll == 1) return SubsetSpec::empty();
  if (t.arity() == 1 && pick(10) < 7) return spec(t.parts()[0]);
  std::vector<SubsetSpec> ps;
  for (const HTerm& part : t.parts()) ps.push_back(spec(part));
  return SubsetSpec::parts(std::move(ps));
}

Cnf Corpus::cnf() {
  Cnf out;
  if (pick(10) == 0) return Cnf::finite(pick(6));
  for (std::uint32_t exp = 4; exp >= 1; --exp)
    if (pick(2)) out.terms.emplace_back(exp, 1 + pick(5));
  if (out.terms.empty()) out.terms.emplace_back(1 + pick(4), 1 + pick(5));
  out.remainder = pick(2) ? pick(5) : 0;
  return out;
}

}  // namespace scord
