#include "df/align.hpp"

#include <algorithm>
#include <stdexcept>

namespace df {

int edit_distance(const TokenSeq& y, const TokenSeq& z) {
  const int n = static_cast<int>(y.size());
  const int m = static_cast<int>(z.size());
  if (n == 0) return m;
  if (m == 0) return n;

  // Single-row DP; only the previous row's diagonal is carried separately.
  std::vector<int> row(m + 1);
  for (int j = 0; j <= m; ++j) row[j] = j;

  for (int i = 1; i <= n; ++i) {
    int diag = row[0];
    row[0] = i;
    for (int j = 1; j <= m; ++j) {
      const int up = row[j];
      const int sub = diag + (y[i - 1] == z[j - 1] ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[m];
}

EditScript align_levenshtein(const TokenSeq& y, const TokenSeq& z) {
  const int n = static_cast<int>(y.size());
  const int m = static_cast<int>(z.size());

  // Full table so the backtrace can apply the fixed tie-breaking order.
  std::vector<int> dp((n + 1) * (m + 1));
  auto at = [&](int i, int j) -> int& { return dp[i * (m + 1) + j]; };
  for (int i = 0; i <= n; ++i) at(i, 0) = i;
  for (int j = 0; j <= m; ++j) at(0, j) = j;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int sub = at(i - 1, j - 1) + (y[i - 1] == z[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  EditScript script;
  script.cost = at(n, m);
  script.ops.reserve(static_cast<size_t>(n) + static_cast<size_t>(m));

  int i = n;
  int j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && y[i - 1] == z[j - 1] && at(i, j) == at(i - 1, j - 1)) {
      script.ops.push_back({EditKind::Match, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      script.ops.push_back({EditKind::Substitute, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      script.ops.push_back({EditKind::Delete, i - 1, -1});
      --i;
    } else {
      script.ops.push_back({EditKind::Insert, -1, j - 1});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  return script;
}

EditScript align_lcs(const TokenSeq& y, const TokenSeq& z) {
  const int n = static_cast<int>(y.size());
  const int m = static_cast<int>(z.size());

  std::vector<int> dp((n + 1) * (m + 1), 0);
  auto at = [&](int i, int j) -> int& { return dp[i * (m + 1) + j]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (y[i - 1] == z[j - 1]) {
        at(i, j) = at(i - 1, j - 1) + 1;
      } else {
        at(i, j) = std::max(at(i - 1, j), at(i, j - 1));
      }
    }
  }

  EditScript script;
  script.ops.reserve(static_cast<size_t>(n) + static_cast<size_t>(m));

  int i = n;
  int j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && y[i - 1] == z[j - 1] && at(i, j) == at(i - 1, j - 1) + 1) {
      script.ops.push_back({EditKind::Match, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && (j == 0 || at(i, j) == at(i - 1, j))) {
      script.ops.push_back({EditKind::Delete, i - 1, -1});
      --i;
    } else {
      script.ops.push_back({EditKind::Insert, -1, j - 1});
      --j;
    }
  }
  std::reverse(script.ops.begin(), script.ops.end());
  script.cost = n + m - 2 * at(n, m);
  return script;
}

DiffMasks masks_from_script(const EditScript& script, int len_y, int len_z) {
  DiffMasks masks;
  masks.m.assign(static_cast<size_t>(len_y), 0);
  masks.m_prime.assign(static_cast<size_t>(len_z), 0);

  auto check_src = [&](int idx) {
    if (idx < 0 || idx >= len_y) throw std::out_of_range("masks_from_script: src index out of range");
  };
  auto check_dst = [&](int idx) {
    if (idx < 0 || idx >= len_z) throw std::out_of_range("masks_from_script: dst index out of range");
  };

  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditKind::Match:
        check_src(op.src_index);
        check_dst(op.dst_index);
        break;
      case EditKind::Substitute:
        check_src(op.src_index);
        check_dst(op.dst_index);
        masks.m[op.src_index] = 1;
        masks.m_prime[op.dst_index] = 1;
        break;
      case EditKind::Delete:
        check_src(op.src_index);
        masks.m[op.src_index] = 1;
        break;
      case EditKind::Insert:
        check_dst(op.dst_index);
        masks.m_prime[op.dst_index] = 1;
        break;
    }
  }
  return masks;
}

SoftWeights soft_weights(const std::vector<uint8_t>& mask, double alpha) {
  SoftWeights sw;
  sw.alpha = alpha;
  sw.w.assign(mask.size(), 0.0);

  size_t t = 0;
  while (t < mask.size()) {
    if (!mask[t]) {
      ++t;
      continue;
    }
    const size_t run_start = t;
    while (t < mask.size() && mask[t]) {
      sw.w[t] = std::exp(-alpha * static_cast<double>(t - run_start));
      ++t;
    }
  }
  return sw;
}

TokenSeq replay_script(const EditScript& script, const TokenSeq& y, const TokenSeq& z) {
  TokenSeq out;
  out.reserve(z.size());
  int next_src = 0;
  int next_dst = 0;

  auto need_src = [&](int idx) {
    if (idx != next_src || idx >= static_cast<int>(y.size()))
      throw std::invalid_argument("replay_script: source indices not contiguous");
    ++next_src;
  };
  auto need_dst = [&](int idx) {
    if (idx != next_dst || idx >= static_cast<int>(z.size()))
      throw std::invalid_argument("replay_script: destination indices not contiguous");
    ++next_dst;
  };

  for (const EditOp& op : script.ops) {
    switch (op.kind) {
      case EditKind::Match:
        need_src(op.src_index);
        need_dst(op.dst_index);
        if (y[op.src_index] != z[op.dst_index])
          throw std::invalid_argument("replay_script: Match over unequal tokens");
        out.push_back(y[op.src_index]);
        break;
      case EditKind::Substitute:
        need_src(op.src_index);
        need_dst(op.dst_index);
        out.push_back(z[op.dst_index]);
        break;
      case EditKind::Delete:
        need_src(op.src_index);
        break;
      case EditKind::Insert:
        need_dst(op.dst_index);
        out.push_back(z[op.dst_index]);
        break;
    }
  }
  if (next_src != static_cast<int>(y.size()) || next_dst != static_cast<int>(z.size()))
    throw std::invalid_argument("replay_script: script does not cover both sequences");
  return out;
}

}  // namespace df
