#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "scord/spec.hpp"
#include "scord/term.hpp"

namespace scord {

// Summand map of a sum-level embedding: sigma(i) = graph[i] below the graph
// size, then a*i + b. Strictly increasing; b may be negative as long as the
// affine reach stays nonnegative.
struct AffMap {
  std::vector<std::uint64_t> graph;
  std::uint64_t a = 1;
  std::int64_t b = 0;

  std::uint64_t operator()(std::uint64_t i) const;
  // Least i with sigma(i) >= v.
  std::uint64_t lower_bound(std::uint64_t v) const;
  // The unique i with sigma(i) == t, if any.
  std::optional<std::uint64_t> invert(std::uint64_t t) const;
};

struct SumRep;

// A structural embedding between terms of matching shape: identity, a point
// image for a singleton source, a summand map with per-summand sub-reps, or
// one rep per part of a Term.
class EmbeddingRep {
 public:
  enum class Kind { Ident, IntoPoint, Sum, Parts };

  static EmbeddingRep ident();
  static EmbeddingRep into_point(Address a);
  static EmbeddingRep sum(SumRep sr);
  static EmbeddingRep parts(std::vector<EmbeddingRep> ps);

  Kind kind() const { return kind_; }
  bool is_ident() const { return kind_ == Kind::Ident; }
  const Address& point() const;
  const SumRep& sum_rep() const;
  const std::vector<EmbeddingRep>& parts_list() const;

  bool operator==(const EmbeddingRep& o) const;

 private:
  Kind kind_ = Kind::Ident;
  std::shared_ptr<const Address> point_;
  std::shared_ptr<const SumRep> sum_;
  std::shared_ptr<const std::vector<EmbeddingRep>> parts_;
};

// Sub-reps: explicit prefix for summands [0, |sub_explicit|), then the
// periodic list cycling forever.
struct SumRep {
  AffMap sigma;
  std::vector<EmbeddingRep> sub_explicit;
  std::vector<EmbeddingRep> sub_periodic;

  const EmbeddingRep& sub_at(std::uint64_t i) const;
};

// Checks that rep is a well-formed embedding of src into dst; throws
// shape_error otherwise. Sub-reps are verified on an initial window long
// enough to cover every (source phase, sub index, target phase) combination,
// which by periodicity covers all summands.
void validate_rep(const EmbeddingRep& rep, const Term& src, const Term& dst);
void validate_rep(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst);

// Image of one point.
Address apply_rep(const EmbeddingRep& rep, const Term& src, const Term& dst, const Address& a);

// Source point mapping to a given target point, if the target is in the image.
std::optional<Address> rep_preimage(const EmbeddingRep& rep, const Term& src, const Term& dst,
                                    const Address& target);

// first after second: the embedding x -> first(second(x)).
EmbeddingRep compose_rep(const EmbeddingRep& first, const EmbeddingRep& second, const Term& src,
                         const Term& mid, const Term& dst);
EmbeddingRep compose_rep(const EmbeddingRep& first, const EmbeddingRep& second, const HTerm& src,
                         const HTerm& mid, const HTerm& dst);

// The image set as a spec over dst.
SubsetSpec image_spec(const EmbeddingRep& rep, const Term& src, const Term& dst);
SubsetSpec image_spec(const EmbeddingRep& rep, const HTerm& src, const HTerm& dst);

// Structural embedding constructor for supported pairs: identical terms,
// singleton sources, and same-kind sums whose pattern elements all fit one
// target pattern element. Returns nullopt outside that class.
std::optional<EmbeddingRep> rep_embed(const HTerm& src, const HTerm& dst);

nlohmann::json rep_to_json(const EmbeddingRep& rep);
EmbeddingRep rep_from_json(const nlohmann::json& j);

}  // namespace scord
