#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctpp/core/io.hpp"
#include "ctpp/core/types.hpp"
#include "ctpp/sim/spec.hpp"

namespace ctpp {

// On-disk dataset layout: sequences.jsonl, taxonomy.json, truth.json.
// truth.json is absent for datasets that carry no generative ground truth.
struct Dataset {
    Taxonomy taxonomy;
    std::vector<StoredSequence> sequences;
    std::optional<GroundTruth> truth;

    std::vector<EventSequence> plain() const { return plain_sequences(sequences); }
};

void emit_dataset(const std::string& dir, const Taxonomy& taxonomy,
                  const std::vector<EventSequence>& sequences,
                  const GroundTruth& truth);

Dataset load_dataset(const std::string& dir);

}  // namespace ctpp
