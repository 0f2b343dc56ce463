#pragma once

#include <cstdint>
#include <vector>

#include "df/tokens.hpp"

namespace df {

enum class EditKind : uint8_t { Match, Substitute, Delete, Insert };

// One step of an alignment path. Match/Substitute carry both indices,
// Delete only src_index, Insert only dst_index (-1 marks absent).
struct EditOp {
  EditKind kind;
  int src_index = -1;
  int dst_index = -1;
};

// Ordered edit path between a source and a destination sequence.
// cost counts the non-Match ops.
struct EditScript {
  std::vector<EditOp> ops;
  int cost = 0;
};

// Two-sided difference masks: m over the source, m_prime over the
// destination. 1 marks positions touched by the edit path.
struct DiffMasks {
  std::vector<uint8_t> m;
  std::vector<uint8_t> m_prime;
};

// Distance-decayed weights derived from a binary mask. alpha = 0 reproduces
// the mask exactly.
struct SoftWeights {
  std::vector<double> w;
  double alpha = 0.0;
};

// Levenshtein distance with unit substitution/deletion/insertion costs.
int edit_distance(const TokenSeq& y, const TokenSeq& z);

// Shortest edit path. Backtrace ties resolve Match > Substitute > Delete >
// Insert so the emitted script (and the derived masks) is deterministic.
EditScript align_levenshtein(const TokenSeq& y, const TokenSeq& z);

// LCS alignment: Match ops form a longest common subsequence, every other
// position becomes Delete (source side) or Insert (destination side).
// Never emits Substitute; cost = |y| + |z| - 2 * LCS.
EditScript align_lcs(const TokenSeq& y, const TokenSeq& z);

// Converts a script into two-sided masks. Throws std::out_of_range if the
// script indices are inconsistent with the stated lengths.
DiffMasks masks_from_script(const EditScript& script, int len_y, int len_z);

// Per-run exponential decay: within each contiguous masked run starting at
// tau, w_t = exp(-alpha * (t - tau)); zero outside runs.
SoftWeights soft_weights(const std::vector<uint8_t>& mask, double alpha);

// Replays a script against its source, pulling Substitute/Insert tokens from
// the destination. Throws std::invalid_argument if the script does not cover
// both sequences in order. Used to validate scripts.
TokenSeq replay_script(const EditScript& script, const TokenSeq& y, const TokenSeq& z);

}  // namespace df
