#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scord/embedding.hpp"
#include "scord/spec.hpp"
#include "scord/term.hpp"

namespace scord {

// Whether the subset holds an isomorphic copy of the whole order. Decided
// per minimal-decomposition part: singleton parts must be fully present,
// and a sum part needs every distinct pattern element realized in some
// phase class of the transported tail.
bool contains_copy(const Term& t, const SubsetSpec& s);

enum class Verdict { False, True, Unknown };

// Almost-inclusion of copies. A part whose difference holds a copy always
// refutes it. Parts with pairwise-comparable pattern elements (all the way
// down) are indivisible, so there the converse holds too and the answer is
// exact; a nonempty copy-free difference on any other part yields Unknown.
// Both sides must contain copies.
Verdict le_star(const Term& t, const SubsetSpec& a, const SubsetSpec& b);

// Nesting height when the part is an iterated single-pattern sum with no
// head (0 for a singleton); -1 otherwise.
int tower_height(const HTerm& part);

enum class Ideal { Fin, FinTimesFin };

// Membership in the finite ideal over "w" or the finite-times-finite ideal
// over "w[w]".
bool ideal_member(Ideal which, const SubsetSpec& s);

struct DisjointCopies {
  EmbeddingRep first, second;
  SubsetSpec first_image, second_image;
};

// Two self-embeddings whose images meet exactly in the singleton parts.
// Requires at least one infinite part; throws precondition_error otherwise.
DisjointCopies disjoint_copies(const Term& t);

// A copy-containing lower bound of a finite le_star-descending chain.
SubsetSpec lower_bound_finite(const Term& t, std::span<const SubsetSpec> chain);

struct FusionResult {
  EmbeddingRep fused;
  std::vector<EmbeddingRep> stages;        // composites of chain prefixes
  std::vector<std::uint64_t> anchors;      // source summand picked per index
};

// Diagonal fusion of a chain of self-embeddings of a one-part sum term:
// the fused embedding routes summand i through the stage-min(i, n-1)
// composite, at the least phase-compatible source index whose image stays
// above everything placed so far.
FusionResult fuse(const Term& t, std::span<const EmbeddingRep> chain);

}  // namespace scord
