#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "scord/hclass.hpp"
#include "scord/term.hpp"

namespace scord {

struct SumSpec;

// An eventually-periodic subset of the order denoted by a term. The shape
// mirrors the term: Full/Empty apply to any node, Sum to an omega- or
// omega*-sum (per-summand entries plus a tail), Parts to a whole Term.
class SubsetSpec {
 public:
  enum class Kind { Full, Empty, Sum, Parts };

  static SubsetSpec full();
  static SubsetSpec empty();
  static SubsetSpec sum(SumSpec ss);
  static SubsetSpec parts(std::vector<SubsetSpec> ps);

  Kind kind() const { return kind_; }
  bool is_full_kind() const { return kind_ == Kind::Full; }
  bool is_empty_kind() const { return kind_ == Kind::Empty; }
  const SumSpec& sum_spec() const;
  const std::vector<SubsetSpec>& parts_list() const;

 private:
  Kind kind_ = Kind::Full;
  std::shared_ptr<const SumSpec> sum_;
  std::shared_ptr<const std::vector<SubsetSpec>> parts_;
};

enum class TailMode { Full, Empty, Periodic };

// Entries for summand indices. Explicitly absent indices below the tail
// start are empty; the tail applies beyond the largest explicit index. A
// periodic tail lists one entry per phase class: entry j applies to summand
// index i with (i - |head|) = j modulo the list length, which must be a
// positive multiple of the pattern length; such a tail must start at or
// beyond the head (pin it with an explicit entry when needed).
struct SumSpec {
  std::map<std::uint64_t, SubsetSpec> entries;
  TailMode tail = TailMode::Full;
  std::vector<SubsetSpec> periodic;

  std::uint64_t tail_start() const {
    return entries.empty() ? 0 : entries.rbegin()->first + 1;
  }
};

// Shape compatibility; throws shape_error with a path on mismatch. A spec
// for a one-part term may address the part directly instead of using Parts.
void shape_check(const SubsetSpec& s, const Term& t);
void shape_check(const SubsetSpec& s, const HTerm& t);

// The spec for the i-th part of t under s (handles Full/Empty/Parts).
const SubsetSpec& part_spec(const SubsetSpec& s, const Term& t, std::size_t i);

// The entry governing summand i of a sum node (handles Full/Empty/Sum).
SubsetSpec spec_at(const SubsetSpec& s, const HTerm& node, std::uint64_t i);

bool spec_is_empty(const SubsetSpec& s, const HTerm& node);
bool spec_is_empty(const SubsetSpec& s, const Term& t);
bool spec_is_full(const SubsetSpec& s, const HTerm& node);
bool spec_is_full(const SubsetSpec& s, const Term& t);

SubsetSpec spec_intersect(const SubsetSpec& a, const SubsetSpec& b, const HTerm& node);
SubsetSpec spec_intersect(const SubsetSpec& a, const SubsetSpec& b, const Term& t);
SubsetSpec spec_diff(const SubsetSpec& a, const SubsetSpec& b, const HTerm& node);
SubsetSpec spec_diff(const SubsetSpec& a, const SubsetSpec& b, const Term& t);
bool spec_subset(const SubsetSpec& a, const SubsetSpec& b, const Term& t);

// Independent pointwise semantics: membership of a single point.
bool spec_contains_point(const SubsetSpec& s, const Term& t, const Address& a);

// Structural mirror; pairs with mirror(term). Right-end indexing makes this
// entry-for-entry with no reversals.
SubsetSpec mirror_spec(const SubsetSpec& s);

// The induced suborder as a fragment term (a list of parts; possibly none).
std::vector<HTerm> restrict_h(const HTerm& node, const SubsetSpec& s);
std::optional<Term> restrict_term(const Term& t, const SubsetSpec& s);

// Spec for a folded part from the specs of the original parts it absorbed.
SubsetSpec transport_spec(std::span<const SubsetSpec> part_specs, const FoldTree& tree);

nlohmann::json spec_to_json(const SubsetSpec& s);
SubsetSpec spec_from_json(const nlohmann::json& j);

}  // namespace scord
