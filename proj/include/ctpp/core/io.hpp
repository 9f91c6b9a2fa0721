#pragma once

#include <string>
#include <vector>

#include "ctpp/core/types.hpp"

namespace ctpp {

// Sequence file contract: JSON Lines, one object per sequence,
//   {"seq_id": string, "T": number, "events": [{"t": number, "type": int}...]}
// with events sorted by time. Extra per-sequence fields (e.g. "scale" and
// "source" written by the preprocessor) are preserved on read.
struct StoredSequence {
    EventSequence seq;
    double scale = 1.0;        // de-normalization factor for binned data
    std::string source;        // originating seq_id for binned data
    bool has_bin_fields = false;
};

void write_sequences_jsonl(const std::string& path,
                           const std::vector<StoredSequence>& seqs);
void write_sequences_jsonl(const std::string& path,
                           const std::vector<EventSequence>& seqs);
std::vector<StoredSequence> read_sequences_jsonl(const std::string& path);

std::vector<EventSequence> plain_sequences(const std::vector<StoredSequence>& in);

// Taxonomy file contract: JSON object mapping id string -> role string.
void write_taxonomy(const std::string& path, const Taxonomy& taxonomy);
Taxonomy read_taxonomy(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ctpp
