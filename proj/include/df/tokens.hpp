#pragma once

#include <cstdint>
#include <vector>

namespace df {

// Vocabulary id. Non-negative, < the configured vocabulary size.
using Token = int;

// Ordered token sequence. Holds policy trajectories, repairs and references.
using TokenSeq = std::vector<Token>;

}  // namespace df
