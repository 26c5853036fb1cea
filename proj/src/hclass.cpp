#include "scord/hclass.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "scord/embed.hpp"

namespace scord {

std::optional<std::pair<HTerm, MergeRule>> mergeable_rule(const HTerm& a, const HTerm& b) {
  if (b.is_omega_sum()) {
    for (const auto& q : b.pattern()) {
      if (embeds(a, q)) {
        std::vector<HTerm> head;
        head.reserve(b.head().size() + 1);
        head.push_back(a);
        head.insert(head.end(), b.head().begin(), b.head().end());
        return std::pair{HTerm::omega_sum(std::move(head), b.pattern()),
                         MergeRule::PrependHead};
      }
    }
  }
  if (a.is_omega_star_sum()) {
    for (const auto& p : a.pattern()) {
      if (embeds(b, p)) {
        std::vector<HTerm> head;
        head.reserve(a.head().size() + 1);
        head.push_back(b);
        head.insert(head.end(), a.head().begin(), a.head().end());
        return std::pair{HTerm::omega_star_sum(a.pattern(), std::move(head)),
                         MergeRule::AppendStarHead};
      }
    }
  }
  return std::nullopt;
}

std::optional<HTerm> mergeable(const HTerm& a, const HTerm& b) {
  auto r = mergeable_rule(a, b);
  if (!r) return std::nullopt;
  return r->first;
}

namespace {

using TreePtr = std::shared_ptr<const FoldTree>;

// All achievable folds of every subinterval, deduplicated by printed form.
// base is the original index of group[0], so leaves carry absolute indices.
struct FoldTable {
  std::size_t n;
  std::vector<std::vector<std::vector<TreePtr>>> f;  // f[i][j]: folds of [i, i+j+1)

  FoldTable(std::span<const HTerm> group, std::size_t base) : n(group.size()) {
    f.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      f[i].assign(n - i, {});
      f[i][0].push_back(std::make_shared<FoldTree>(group[i], base + i));
    }
    for (std::size_t len = 2; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        auto& cell = f[i][len - 1];
        std::unordered_set<std::string> seen;
        for (std::size_t k = 1; k < len; ++k) {
          for (const auto& l : f[i][k - 1]) {
            for (const auto& r : f[i + k][len - k - 1]) {
              auto merged = mergeable_rule(l->value, r->value);
              if (!merged) continue;
              if (!seen.insert(merged->first.repr()).second) continue;
              cell.push_back(std::make_shared<FoldTree>(merged->first, l, r,
                                                        merged->second));
            }
          }
        }
      }
    }
  }
};

}  // namespace

std::vector<FoldResult> h_fold_all(std::span<const HTerm> group) {
  if (group.empty()) throw precondition_error("h_fold: empty group");
  FoldTable table(group, 0);
  std::vector<FoldResult> out;
  for (const auto& t : table.f[0][group.size() - 1])
    out.push_back({t->value, t});
  return out;
}

std::optional<FoldResult> h_fold(std::span<const HTerm> group) {
  auto all = h_fold_all(group);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Decomposition min_decomposition(const Term& t) {
  require_valid(t);
  const auto& parts = t.parts();
  const std::size_t n = parts.size();
  FoldTable table(parts, 0);

  // suf[i]: minimal number of ha summands covering parts[i..n).
  const std::size_t kInf = n + 1;
  std::vector<std::size_t> suf(n + 1, kInf);
  suf[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (table.f[i][j - i - 1].empty()) continue;
      if (suf[j] != kInf) suf[i] = std::min(suf[i], suf[j] + 1);
    }
  }
  if (suf[0] == kInf) throw error("internal: no decomposition found");

  // Earliest split points: make each group as short as minimality allows.
  Decomposition d;
  d.m = suf[0];
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (table.f[i][j - i - 1].empty() || suf[j] + 1 != suf[i]) ++j;
    const auto& tree = table.f[i][j - i - 1].front();
    d.parts.push_back(tree->value);
    d.provenance.emplace_back(i, j - 1);
    d.trees.push_back(tree);
    i = j;
  }
  return d;
}

}  // namespace scord
