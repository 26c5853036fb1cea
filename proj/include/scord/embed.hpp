#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scord/term.hpp"

namespace scord {

// Order embeddability of the denoted linear orders. Both sides must be valid.
bool embeds(const Term& s, const Term& t);
bool embeds(const HTerm& s, const HTerm& t);

// A consecutive run of parts into a single ha target: every non-boundary
// element must fit a pattern element, the boundary element the whole target
// (the last element for an OmegaSum target, the first for an OmegaStarSum).
bool embeds_group_into_ha(std::span<const HTerm> group, const HTerm& target);

// Constructive certificate: the points of truncate(s, depth), in order,
// mapped to strictly increasing addresses of t. Placement always picks the
// leftmost admissible fresh pattern occurrence after the previous image.
struct WitnessMap {
  int depth = 0;
  std::vector<std::pair<Address, Address>> pairs;
};

std::optional<WitnessMap> embed_witness(const Term& s, const Term& t, int depth);

}  // namespace scord
