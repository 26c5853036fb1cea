#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scord {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct shape_error : error {
  shape_error(const std::string& what, const std::string& at)
      : error(what + " [path " + at + "]"), path(at) {}
  std::string path;
};

struct precondition_error : error {
  using error::error;
};

enum class HKind { Singleton, OmegaSum, OmegaStarSum };

namespace detail {
struct HTermNode;
}

// An hereditarily additively indecomposable building block.
//
// OmegaSum(head, pattern) denotes the w-indexed sum whose summand i is head[i]
// for i < |head| and pattern[(i - |head|) mod |pattern|] afterwards.
// OmegaStarSum denotes the mirror image: summands are indexed from the right
// end by the same rule, so head[0] is the rightmost summand and the pattern
// repeats leftward forever. With this indexing every statement about
// OmegaSum dualizes to OmegaStarSum without reindexing.
//
// Values are immutable and cheap to copy.
class HTerm {
 public:
  static HTerm singleton();
  static HTerm omega_sum(std::vector<HTerm> head, std::vector<HTerm> pattern);
  static HTerm omega_star_sum(std::vector<HTerm> pattern, std::vector<HTerm> head);

  HKind kind() const;
  bool is_singleton() const { return kind() == HKind::Singleton; }
  bool is_omega_sum() const { return kind() == HKind::OmegaSum; }
  bool is_omega_star_sum() const { return kind() == HKind::OmegaStarSum; }
  bool is_sum() const { return !is_singleton(); }

  // Empty for Singleton.
  const std::vector<HTerm>& head() const;
  const std::vector<HTerm>& pattern() const;

  // Summand at index i (left index for OmegaSum, right-end index for
  // OmegaStarSum), following the head/pattern rule. Sum kinds only.
  const HTerm& summand(std::uint64_t i) const;

  // Canonical concrete syntax; parse(repr()) reproduces the value.
  const std::string& repr() const;
  std::uint32_t size() const;        // node count
  bool omega_star_free() const;      // no OmegaStarSum anywhere

  bool operator==(const HTerm& o) const { return repr() == o.repr(); }
  bool operator!=(const HTerm& o) const { return !(*this == o); }

 private:
  explicit HTerm(std::shared_ptr<const detail::HTermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::HTermNode> node_;
};

// A nonempty finite concatenation of HTerm parts.
class Term {
 public:
  explicit Term(std::vector<HTerm> parts);
  static Term of(const HTerm& h) { return Term(std::vector<HTerm>{h}); }

  const std::vector<HTerm>& parts() const { return parts_; }
  std::size_t arity() const { return parts_.size(); }
  std::string repr() const;
  bool omega_star_free() const;

  bool operator==(const Term& o) const { return repr() == o.repr(); }
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  std::vector<HTerm> parts_;
};

// A point of a Term: the part index followed by summand indices down to a
// Singleton leaf (whose own step is implicit). Indices at OmegaStarSum nodes
// are right-end indices, where larger means further left.
using Address = std::vector<std::uint64_t>;

std::string to_string(const Address& a);

HTerm mirror(const HTerm& t);
Term mirror(const Term& t);

std::string print_term(const Term& t);
std::string print_hterm(const HTerm& t);

// Whitespace-insensitive concrete syntax:
//   term := hsum ("+" hsum)*
//   hsum := "1" | NAT | "w" | "w*" | "w^" NAT
//         | "w" "[" list (";" list)? "]" | "w*" "[" list (";" list)? "]"
//   list := hsum ("," hsum)*
// "w[A;B]" has head list A and pattern B; "w[B]" has an empty head.
// "w*[B;A]" has pattern B and head A, with A written in the left-to-right
// order of the denoted order (A occupies the rightmost positions).
// NAT >= 2 abbreviates that many concatenated Singletons, "w^k" the k-fold
// nested w[...[w]...]. Validates the head-into-pattern condition and throws
// parse_error / precondition_error.
Term parse_term(const std::string& text);

// True when every head element of every sum node embeds into some pattern
// element of the same node (the fragment-level surrogate of the requirement
// that every summand embeds into infinitely many summands).
bool hterm_valid(const HTerm& t);
bool term_valid(const Term& t);
void require_valid(const HTerm& t);
void require_valid(const Term& t);

bool address_valid(const Term& t, const Address& a);
// -1 / 0 / +1 in the order of the denoted linear order.
int address_compare(const Term& t, const Address& a, const Address& b);

// Addresses, in order, of the finite suborder taking the first
// |head| + depth*|pattern| summands of each OmegaSum (the last such summands
// of each OmegaStarSum), recursively truncated at the same depth.
std::vector<Address> truncate(const Term& t, int depth);
std::vector<Address> truncate_h(const HTerm& t, int depth);

}  // namespace scord
