// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtkd/rng.hpp"

namespace mtkd {

// Reserved token ids. Every tokenized sequence starts with kClsId.
inline constexpr int kPadId = 0;
inline constexpr int kSepId = 1;
inline constexpr int kClsId = 2;
inline constexpr int kUnkId = 3;
inline constexpr int kNumReservedIds = 4;

enum class TaskKind { MrcSpan, Nli, Sa, Pi };

/// Number of output classes for a classification task. MrcSpan has no class
/// count (span heads emit per-token start/end logits) and returns 0.
int task_num_classes(TaskKind task);

const char* task_name(TaskKind task);
std::optional<TaskKind> task_from_name(const std::string& name);
bool is_span_task(TaskKind task);

/// One labeled instance. Classification tasks use `label`; MrcSpan uses
/// (span_start, span_end) token indices with (0,0) meaning "no answer".
struct Example {
    std::string id;
    std::vector<int> token_ids;
    int label = 0;
    int span_start = 0;
    int span_end = 0;
};

struct Dataset {
    std::string name;
    TaskKind task = TaskKind::Nli;
    std::vector<Example> examples;

    std::size_t size() const { return examples.size(); }
};

/// Validates one example against its task kind; throws std::invalid_argument
/// naming the example id on the first violated invariant.
void validate_example(const Example& ex, TaskKind task);

/// Validates the whole dataset: non-empty, unique ids, per-example invariants.
void validate_dataset(const Dataset& ds);

/// Lowercases (ASCII), splits into alphanumeric runs and single punctuation
/// characters, and maps each token to 4 + (fnv1a64(token) mod (vocab_size-4)).
/// Pure and platform-independent. Empty text yields an empty sequence.
std::vector<int> tokenize(const std::string& text, int vocab_size);

/// Builds a model-ready id sequence: [cls] text [sep] text_pair.
std::vector<int> encode_input(const std::string& text, const std::string& text_pair,
                              int vocab_size);

/// Reads the dataset JSONL format (one object per line). Token-mode files
/// carry `tokens`; text-mode files carry `text` (+ optional `text_pair`) and
/// are tokenized with `vocab_size`. Mixing the two modes in one file is
/// rejected. Parse errors report the line number, invariant violations the
/// example id. The dataset name is the file stem.
Dataset load_dataset(const std::string& path, int vocab_size);

/// Writes token-mode JSONL; load_dataset(save_dataset(ds)) round-trips.
void save_dataset(const Dataset& ds, const std::string& path);

/// Epoch-shuffled without-replacement minibatch sampling. Each epoch visits
/// every example exactly once in a seeded random order; the order is
/// reshuffled when the pass is exhausted. A batch never crosses an epoch
/// boundary, so its size is the dataset remainder when fewer than `size`
/// examples are left.
class MinibatchSampler {
public:
    MinibatchSampler() = default;
    MinibatchSampler(const Dataset* dataset, std::uint64_t seed);

    /// Indices into the dataset's example vector.
    std::vector<int> next_indices(int size);

    std::vector<const Example*> next_batch(int size);

    const Dataset* dataset() const { return dataset_; }

    /// Exact sampler state for bit-exact training resume.
    std::string serialize_state() const;
    void restore_state(const std::string& state);

private:
    void reshuffle();

    const Dataset* dataset_ = nullptr;
    Rng rng_;
    std::vector<int> order_;
    std::size_t cursor_ = 0;
};

/// Difficulty knobs for synthetic dataset generation.
struct SynthOptions {
    int seq_len = 12;
    int vocab_size = 256;
    int n_markers = 3;          // class-indicative tokens per classification example
    double noise_rate = 0.0;    // P(markers indicate a random class instead of the label)
    double no_answer_frac = 0.25; // MrcSpan: fraction of (0,0)-labeled examples
    double label_noise = 0.0;   // P(stored label replaced by a random wrong class)
};

/// Label-learnable synthetic data, deterministic for a given (task, n, seed,
/// options). Classification examples plant `n_markers` copies of a per-class
/// marker token among filler tokens; MrcSpan examples plant a short answer
/// span in the context that repeats a query token given before the
/// question-marker token.
Dataset synth_generate(TaskKind task, int n, std::uint64_t seed, const SynthOptions& opts = {});

} // namespace mtkd
