#pragma once

#include <string>
#include <vector>

#include "scord/term.hpp"

namespace scord {

// Typed blocks of a minimal decomposition:
//   A: a maximal run of singletons
//   B: a run of omega-sums
//   C: a run of omega*-sums
//   D: exactly one omega*-sum followed by one omega-sum
enum class BlockKind { A, B, C, D };

struct Block {
  BlockKind kind;
  std::size_t first = 0, last = 0;  // inclusive part-index interval
  std::vector<HTerm> parts;
};

char to_char(BlockKind k);

// The unique partition into blocks. Scan: maximal equal-kind runs; when an
// omega*-run immediately precedes an omega-run, its last part and the run's
// first part pair into a D block, the rest forming C / B blocks. Throws
// precondition_error unless the input is a valid minimal decomposition.
std::vector<Block> block_partition(const std::vector<HTerm>& parts);

// Declarative boundary conditions, checked predicate by predicate,
// independent of the scan:
//   A: all singletons; starts the sequence or follows an infinite part; ends
//      it or precedes an infinite part.
//   B: all omega-sums; starts the sequence or follows an omega-sum that
//      itself follows an omega*-sum; ends it or precedes a non-omega-sum.
//   C: all omega*-sums; starts the sequence or follows a non-omega*-sum;
//      ends it or precedes an omega*-sum followed by an omega-sum.
//   D: exactly two parts, an omega*-sum then an omega-sum.
bool block_conditions_hold(const std::vector<HTerm>& parts,
                           const std::vector<Block>& blocks);

// Removing the first block leaves exactly the tail of the partition.
bool blocks_tail_consistent(const std::vector<HTerm>& parts);

// Paper-style rendering, e.g. "111 | w*w* | w*w | w".
std::string bar_notation(const std::vector<Block>& blocks);

}  // namespace scord
