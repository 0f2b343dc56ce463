#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "df/tokens.hpp"

namespace df {

// Closed vocabulary shared by every task family. Layout is fixed so that
// checkpoints and serialized datasets stay stable across configurations.
namespace vocab {

constexpr int kSize = 64;

constexpr int kMaxColors = 4;
constexpr int kMaxSide = 5;

constexpr Token digit(int d) { return d; }                      // 0..9
constexpr Token color(int c) { return 10 + c; }                 // 10..13
constexpr Token cell(int r, int c) { return 14 + r * kMaxSide + c; }  // 14..38
constexpr Token kAnswer = 39;  // answer delimiter
constexpr Token kEos = 40;
constexpr Token kCount = 41;   // question verb: how many cells of a color
constexpr Token kLookup = 42;  // question verb: color of a named cell
constexpr Token filler(int i) { return 43 + i; }                // 43..63, reasoning filler
constexpr int kNumFiller = kSize - 43;

constexpr bool is_digit(Token t) { return t >= 0 && t <= 9; }
constexpr bool is_color(Token t) { return t >= 10 && t <= 13; }
constexpr bool is_filler(Token t) { return t >= 43 && t < kSize; }

}  // namespace vocab

enum class TaskFamily { GridCount, AttributeLookup };

std::string family_name(TaskFamily f);
TaskFamily family_from_name(const std::string& name);

// One synthetic multimodal instance: a colored grid encoded as a flat
// one-hot-per-cell feature vector plus a two-token question. A blank
// (all-zero) feature vector is a valid in-domain image decoding to an empty
// grid.
struct TaskInstance {
  uint64_t task_id = 0;
  TaskFamily family = TaskFamily::GridCount;
  int difficulty = 3;
  int side = 3;
  int num_colors = 3;
  std::vector<double> image_features;  // side*side*num_colors
  TokenSeq question_tokens;
  TokenSeq ground_truth_answer;

  int feat_dim() const { return side * side * num_colors; }
};

// Grid geometry for a difficulty level: side = difficulty (2..5),
// colors = difficulty (2..4, saturating).
int side_for_difficulty(int difficulty);
int colors_for_difficulty(int difficulty);
int feat_dim_for(int difficulty);

TaskInstance generate_task(TaskFamily family, int difficulty, uint64_t seed);

// Correct answer for the question under an arbitrary feature vector (the
// task's own, a blank counterfactual, a noise image, ...). May be empty for
// lookups of an empty cell.
TokenSeq ground_truth_for(const TaskInstance& task, std::span<const double> features);

struct AnswerCheck {
  int reward = 0;       // 1 iff the extracted span equals the ground truth
  bool format_ok = false;  // answer delimiter present
};

// Extracts the span after the first answer delimiter (up to EOS or end).
struct ExtractedAnswer {
  bool found = false;
  TokenSeq span;
};
ExtractedAnswer extract_answer(const TokenSeq& output);

AnswerCheck check_answer_on(const TaskInstance& task, std::span<const double> features,
                            const TokenSeq& output);
AnswerCheck check_answer_detail(const TaskInstance& task, const TokenSeq& output);
int check_answer(const TaskInstance& task, const TokenSeq& output);

// A formatted correct trajectory for the task: seeded filler prefix, then
// delimiter, answer, EOS. Benchmark machinery; not produced by any policy.
TokenSeq scripted_correct_trajectory(const TaskInstance& task, int filler_len, uint64_t seed);

// Substitution-only corruption with exact ground-truth spans.
struct InjectedError {
  TokenSeq corrupted;
  std::vector<int> true_spans;  // sorted source positions that were modified
};

// Substitutes k distinct filler positions (before the delimiter) and, when
// corrupt_answer is set, one answer-span position so the result is incorrect.
// Throws std::invalid_argument if the input has no delimiter or k exceeds the
// available non-protected positions.
InjectedError inject_errors(const TaskInstance& task, const TokenSeq& correct, int k,
                            bool corrupt_answer, uint64_t seed);

// Line-delimited task set persistence: instances regenerate from seeds.
struct TaskSetEntry {
  uint64_t task_id = 0;
  TaskFamily family = TaskFamily::GridCount;
  uint64_t seed = 0;
  int difficulty = 3;
};

void save_task_set(const std::string& path, const std::vector<TaskSetEntry>& entries);
std::vector<TaskSetEntry> load_task_set(const std::string& path);

}  // namespace df
