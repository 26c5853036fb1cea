#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scord/term.hpp"

namespace scord {

// How two adjacent ha terms merged into one.
//   PrependHead:    A + OmegaSum(H,Q) = OmegaSum([A]+H, Q) when A fits a
//                   pattern element of the right term.
//   AppendStarHead: OmegaStarSum(P,H) + B = OmegaStarSum(P, [B]+H) when B
//                   fits a pattern element of the left term; [B] lands at
//                   right-end index 0, i.e. rightmost.
enum class MergeRule { PrependHead, AppendStarHead };

// PrependHead is tried first when both rules would apply.
std::optional<HTerm> mergeable(const HTerm& a, const HTerm& b);
std::optional<std::pair<HTerm, MergeRule>> mergeable_rule(const HTerm& a, const HTerm& b);

// Provenance of a fold: which original parts combined, in what order, by
// which rule. Leaves carry the original part index.
struct FoldTree {
  HTerm value;
  std::size_t leaf_index = 0;
  std::shared_ptr<const FoldTree> left, right;
  MergeRule rule = MergeRule::PrependHead;
  bool is_leaf() const { return left == nullptr; }

  FoldTree(HTerm v, std::size_t idx) : value(std::move(v)), leaf_index(idx) {}
  FoldTree(HTerm v, std::shared_ptr<const FoldTree> l,
           std::shared_ptr<const FoldTree> r, MergeRule ru)
      : value(std::move(v)), left(std::move(l)), right(std::move(r)), rule(ru) {}
};

struct FoldResult {
  HTerm value;
  std::shared_ptr<const FoldTree> tree;
};

// Folds a consecutive group into a single ha term if some binary split tree
// of merges achieves it. h_fold returns the canonical (first-found) result;
// h_fold_all returns every achievable folded value, deduplicated.
std::optional<FoldResult> h_fold(std::span<const HTerm> group);
std::vector<FoldResult> h_fold_all(std::span<const HTerm> group);

struct Decomposition {
  std::size_t m = 0;
  std::vector<HTerm> parts;
  // provenance[i] = [first, last] interval of original part indices.
  std::vector<std::pair<std::size_t, std::size_t>> provenance;
  std::vector<std::shared_ptr<const FoldTree>> trees;
};

// Minimal number of ha summands, with deterministic earliest-split
// reconstruction and per-part fold provenance.
Decomposition min_decomposition(const Term& t);

}  // namespace scord
