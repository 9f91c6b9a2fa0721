#include "ctpp/core/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctpp/core/error.hpp"

namespace ctpp {

using nlohmann::json;

namespace {

json sequence_to_json(const StoredSequence& s) {
    json ev = json::array();
    for (const auto& e : s.seq.events) ev.push_back({{"t", e.t}, {"type", e.type}});
    json obj{{"seq_id", s.seq.seq_id}, {"T", s.seq.horizon_T}, {"events", ev}};
    if (s.has_bin_fields) {
        obj["scale"] = s.scale;
        obj["source"] = s.source;
    }
    return obj;
}

StoredSequence sequence_from_json(const json& obj, const std::string& path) {
    StoredSequence s;
    try {
        s.seq.seq_id = obj.at("seq_id").get<std::string>();
        s.seq.horizon_T = obj.at("T").get<double>();
        for (const auto& e : obj.at("events"))
            s.seq.events.push_back({e.at("type").get<int>(), e.at("t").get<double>()});
        if (obj.contains("scale")) {
            s.scale = obj.at("scale").get<double>();
            s.has_bin_fields = true;
        }
        if (obj.contains("source")) s.source = obj.at("source").get<std::string>();
    } catch (const json::exception& ex) {
        throw IoError(path + ": malformed sequence record: " + ex.what());
    }
    s.seq.validate();
    return s;
}

}  // namespace

void write_sequences_jsonl(const std::string& path,
                           const std::vector<StoredSequence>& seqs) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (const auto& s : seqs) out << sequence_to_json(s).dump() << '\n';
    if (!out) throw IoError("write failed on " + path);
}

void write_sequences_jsonl(const std::string& path,
                           const std::vector<EventSequence>& seqs) {
    std::vector<StoredSequence> wrapped(seqs.size());
    for (std::size_t i = 0; i < seqs.size(); ++i) wrapped[i].seq = seqs[i];
    write_sequences_jsonl(path, wrapped);
}

std::vector<StoredSequence> read_sequences_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<StoredSequence> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::exception& ex) {
            throw IoError(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
        out.push_back(sequence_from_json(obj, path));
    }
    return out;
}

std::vector<EventSequence> plain_sequences(const std::vector<StoredSequence>& in) {
    std::vector<EventSequence> out;
    out.reserve(in.size());
    for (const auto& s : in) out.push_back(s.seq);
    return out;
}

void write_taxonomy(const std::string& path, const Taxonomy& taxonomy) {
    json obj = json::object();
    for (int i = 0; i < taxonomy.size(); ++i)
        obj[std::to_string(i)] = role_name(taxonomy.role(i));
    write_text_file(path, obj.dump(2) + "\n");
}

Taxonomy read_taxonomy(const std::string& path) {
    json obj;
    try {
        obj = json::parse(read_text_file(path));
    } catch (const json::exception& ex) {
        throw IoError(path + ": " + ex.what());
    }
    std::vector<Role> roles(obj.size(), Role::Covariate);
    for (const auto& [key, value] : obj.items()) {
        std::size_t id = 0;
        try {
            id = std::stoul(key);
        } catch (const std::exception&) {
            throw IoError(path + ": non-integer type id '" + key + "'");
        }
        if (id >= roles.size())
            throw IoError(path + ": type ids must be dense 0..K-1, got " + key);
        roles[id] = role_from_name(value.get<std::string>());
    }
    return Taxonomy(std::move(roles));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed on " + path);
}

}  // namespace ctpp
