#pragma once

#include <cstdint>
#include <random>

#include "scord/cnf.hpp"
#include "scord/spec.hpp"
#include "scord/term.hpp"

namespace scord {

// Seeded generators behind the corpus runner and the property suites. Draws
// reduce mt19937_64 output by explicit modulo, so a seed names the same
// corpus on every platform and standard library.
class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t pick(std::uint64_t n);  // draw in [0, n), n >= 1

  // Valid ha term of nesting depth at most depth: pattern lists of one to
  // three elements, head lists of up to two, each head element a fresh
  // singleton or a copy of a pattern element (so it embeds by construction).
  HTerm hterm(unsigned depth, bool allow_star = true);

  // One to max_parts parts.
  Term term(unsigned depth = 2, unsigned max_parts = 3, bool allow_star = true);

  // w*-free term whose ordinal value is below w^4 with every CNF
  // coefficient (and the finite remainder) at most 3, nesting at most 3.
  Term small_ordinal_term();

  // Subset spec shaped for the given node or term.
  SubsetSpec spec(const HTerm& node);
  SubsetSpec spec(const Term& t);

  // CNF ordinal below w^5.
  Cnf cnf();

 private:
  std::mt19937_64 rng_;
};

}  // namespace scord
