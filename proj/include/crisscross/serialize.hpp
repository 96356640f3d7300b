#ifndef CRISSCROSS_SERIALIZE_HPP
#define CRISSCROSS_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "channel.hpp"
#include "codec.hpp"

namespace crisscross {

using nlohmann::json;

inline std::string bits_to_string(const Bits& b) {
    std::string s;
    s.reserve(b.size());
    for (auto x : b) s.push_back(x ? '1' : '0');
    return s;
}

inline Bits bits_from_string(const std::string& s) {
    Bits b;
    b.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            b.push_back(0);
        else if (c == '1')
            b.push_back(1);
        else
            throw IoError("bits: expected only 0/1 characters");
    }
    return b;
}

// {mode, row_ops:[{index, content?}], col_ops:[...], seed?}
inline json pattern_to_json(const ChannelPattern& p) {
    json j;
    j["mode"] = (p.mode == ChannelMode::Deletion) ? "deletion" : "insertion";
    j["row_ops"] = json::array();
    for (const auto& op : p.row_ops) {
        json o{{"index", op.index}};
        if (p.mode == ChannelMode::Insertion) o["content"] = bits_to_string(op.content);
        j["row_ops"].push_back(o);
    }
    j["col_ops"] = json::array();
    for (const auto& op : p.col_ops) {
        json o{{"index", op.index}};
        if (p.mode == ChannelMode::Insertion) o["content"] = bits_to_string(op.content);
        j["col_ops"].push_back(o);
    }
    if (p.has_seed) j["seed"] = p.seed;
    return j;
}

inline ChannelPattern pattern_from_json(const json& j) {
    ChannelPattern p;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "deletion")
        p.mode = ChannelMode::Deletion;
    else if (mode == "insertion")
        p.mode = ChannelMode::Insertion;
    else
        throw IoError("pattern: mode must be deletion or insertion");
    auto read_ops = [&](const char* key) {
        std::vector<ChannelOp> ops;
        if (!j.contains(key)) return ops;
        for (const auto& o : j.at(key)) {
            ChannelOp op;
            op.index = o.at("index").get<std::size_t>();
            if (o.contains("content")) op.content = bits_from_string(o.at("content").get<std::string>());
            ops.push_back(std::move(op));
        }
        return ops;
    };
    p.row_ops = read_ops("row_ops");
    p.col_ops = read_ops("col_ops");
    if (j.contains("seed")) {
        p.seed = j.at("seed").get<std::uint64_t>();
        p.has_seed = true;
    }
    return p;
}

inline json report_to_json(const DecodeReport& r) {
    json j;
    j["mode"] = (r.mode == ChannelMode::Deletion) ? "deletion" : "insertion";
    j["t_r"] = r.t_r;
    j["t_c"] = r.t_c;
    j["located_rows"] = r.located_rows;
    j["located_cols"] = r.located_cols;
    j["confusions"] = json::array();
    for (const auto& c : r.confusions)
        j["confusions"].push_back(json{{"axis", std::string(1, c.axis)},
                                       {"start", c.start},
                                       {"end", c.end},
                                       {"original_count", c.original_count}});
    j["erasures_used"] = r.erasures_used;
    j["success"] = r.success;
    return j;
}

}  // namespace crisscross

#endif
