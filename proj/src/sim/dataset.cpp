#include "ctpp/sim/dataset.hpp"

#include <filesystem>

#include "ctpp/core/error.hpp"

namespace ctpp {

namespace fs = std::filesystem;

void emit_dataset(const std::string& dir, const Taxonomy& taxonomy,
                  const std::vector<EventSequence>& sequences,
                  const GroundTruth& truth) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
    write_sequences_jsonl(dir + "/sequences.jsonl", sequences);
    write_taxonomy(dir + "/taxonomy.json", taxonomy);
    write_truth(dir + "/truth.json", truth);
}

Dataset load_dataset(const std::string& dir) {
    Dataset ds;
    ds.taxonomy = read_taxonomy(dir + "/taxonomy.json");
    ds.sequences = read_sequences_jsonl(dir + "/sequences.jsonl");
    for (const auto& s : ds.sequences) s.seq.validate(&ds.taxonomy);
    if (fs::exists(dir + "/truth.json")) ds.truth = read_truth(dir + "/truth.json");
    return ds;
}

}  // namespace ctpp
