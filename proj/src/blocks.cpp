#include "scord/blocks.hpp"

#include <string>

#include "scord/embed.hpp"
#include "scord/hclass.hpp"

namespace scord {

char to_char(BlockKind k) {
  switch (k) {
    case BlockKind::A: return 'A';
    case BlockKind::B: return 'B';
    case BlockKind::C: return 'C';
    case BlockKind::D: return 'D';
  }
  throw error("unreachable");
}

namespace {

Block make_block(BlockKind kind, std::size_t first, std::size_t last,
                 const std::vector<HTerm>& parts) {
  Block b;
  b.kind = kind;
  b.first = first;
  b.last = last;
  b.parts.assign(parts.begin() + static_cast<std::ptrdiff_t>(first),
                 parts.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return b;
}

void require_min_decomposition(const std::vector<HTerm>& parts) {
  if (parts.empty())
    throw precondition_error("block_partition: empty part list");
  for (const auto& p : parts) require_valid(p);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (mergeable(parts[i], parts[i + 1]))
      throw precondition_error("block_partition: adjacent parts " +
                               std::to_string(i) + "," + std::to_string(i + 1) +
                               " merge; not a minimal decomposition");
}

}  // namespace

std::vector<Block> block_partition(const std::vector<HTerm>& parts) {
  require_min_decomposition(parts);
  std::vector<Block> out;
  std::size_t i = 0;
  while (i < parts.size()) {
    HKind k = parts[i].kind();
    std::size_t j = i;
    while (j + 1 < parts.size() && parts[j + 1].kind() == k) ++j;
    if (k == HKind::OmegaStarSum && j + 1 < parts.size() &&
        parts[j + 1].is_omega_sum()) {
      if (j > i) out.push_back(make_block(BlockKind::C, i, j - 1, parts));
      out.push_back(make_block(BlockKind::D, j, j + 1, parts));
      std::size_t wj = j + 1;
      while (wj + 1 < parts.size() && parts[wj + 1].is_omega_sum()) ++wj;
      if (wj > j + 1) out.push_back(make_block(BlockKind::B, j + 2, wj, parts));
      i = wj + 1;
    } else {
      BlockKind bk = k == HKind::Singleton
                         ? BlockKind::A
                         : (k == HKind::OmegaSum ? BlockKind::B : BlockKind::C);
      out.push_back(make_block(bk, i, j, parts));
      i = j + 1;
    }
  }
  return out;
}

bool block_conditions_hold(const std::vector<HTerm>& parts,
                           const std::vector<Block>& blocks) {
  const std::size_t m = parts.size();
  std::size_t expect = 0;
  for (const auto& b : blocks) {
    if (b.first != expect || b.last < b.first || b.last >= m) return false;
    expect = b.last + 1;
    if (b.parts.size() != b.last - b.first + 1) return false;
    for (std::size_t x = 0; x < b.parts.size(); ++x)
      if (!(b.parts[x] == parts[b.first + x])) return false;

    const std::size_t i = b.first;
    const std::size_t end = b.last;  // i + k
    bool ok = true;
    switch (b.kind) {
      case BlockKind::A:
        for (const auto& p : b.parts) ok = ok && p.is_singleton();
        ok = ok && (i == 0 || !parts[i - 1].is_singleton());
        ok = ok && (end == m - 1 || !parts[end + 1].is_singleton());
        break;
      case BlockKind::B:
        for (const auto& p : b.parts) ok = ok && p.is_omega_sum();
        ok = ok && (i == 0 || (i >= 2 && parts[i - 1].is_omega_sum() &&
                               parts[i - 2].is_omega_star_sum()));
        ok = ok && (end == m - 1 || !parts[end + 1].is_omega_sum());
        break;
      case BlockKind::C:
        for (const auto& p : b.parts) ok = ok && p.is_omega_star_sum();
        ok = ok && (i == 0 || !parts[i - 1].is_omega_star_sum());
        ok = ok && (end == m - 1 ||
                    (parts[end + 1].is_omega_star_sum() && end + 2 < m &&
                     parts[end + 2].is_omega_sum()));
        break;
      case BlockKind::D:
        ok = end == i + 1 && parts[i].is_omega_star_sum() &&
             parts[i + 1].is_omega_sum();
        break;
    }
    if (!ok) return false;
  }
  return expect == m;
}

bool blocks_tail_consistent(const std::vector<HTerm>& parts) {
  auto blocks = block_partition(parts);
  if (blocks.size() <= 1) return true;
  const std::size_t cut = blocks[0].last + 1;
  std::vector<HTerm> rest(parts.begin() + static_cast<std::ptrdiff_t>(cut),
                          parts.end());
  auto tail = block_partition(rest);
  if (tail.size() != blocks.size() - 1) return false;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i].kind != blocks[i + 1].kind) return false;
    if (tail[i].first + cut != blocks[i + 1].first) return false;
    if (tail[i].last + cut != blocks[i + 1].last) return false;
  }
  return true;
}

std::string bar_notation(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " | ";
    for (const auto& p : blocks[i].parts) {
      if (p.is_singleton())
        out += "1";
      else if (p.is_omega_sum())
        out += "w";
      else
        out += "w*";
    }
  }
  return out;
}

}  // namespace scord
