#include "sunflower/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace sunflower {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

}  // namespace

SetSystem read_system_text(std::string_view text) {
    std::vector<std::string> ground;
    std::unordered_map<std::string, std::size_t> index;
    auto intern = [&](const std::string& label) {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        index.emplace(label, ground.size());
        ground.push_back(label);
        return ground.size() - 1;
    };

    std::vector<std::vector<std::string>> sets;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line[0] == '#') continue;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "!ground") {
            for (std::size_t i = 1; i < tokens.size(); ++i) intern(tokens[i]);
            continue;
        }
        if (tokens[0] == "!empty") {
            sets.emplace_back();  // the empty member
            continue;
        }
        for (const std::string& t : tokens) intern(t);
        sets.push_back(std::move(tokens));
    }
    return build_system(ground, sets);
}

std::string write_system_text(const SetSystem& h) {
    std::ostringstream out;
    out << "!ground";
    for (const std::string& label : h.ground) out << ' ' << label;
    out << '\n';
    for (const Bitset& s : h.members) {
        if (s.none()) {
            out << "!empty\n";
            continue;
        }
        bool first = true;
        for (int e : s.elements()) {
            if (!first) out << ' ';
            out << h.ground[static_cast<std::size_t>(e)];
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

SetSystem read_system_json(std::string_view text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<std::string> ground = doc.at("ground").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> sets = doc.at("sets").get<std::vector<std::vector<std::string>>>();
    return build_system(ground, sets);
}

std::string write_system_json(const SetSystem& h) {
    nlohmann::json doc;
    doc["ground"] = h.ground;
    std::vector<std::vector<std::string>> sets;
    sets.reserve(h.size());
    for (const Bitset& s : h.members) {
        std::vector<std::string> labels;
        for (int e : s.elements()) labels.push_back(h.ground[static_cast<std::size_t>(e)]);
        sets.push_back(std::move(labels));
    }
    doc["sets"] = sets;
    return doc.dump(2) + "\n";
}

SetSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_system_json(text);
    return read_system_text(text);
}

void write_system_file(const SetSystem& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        out << write_system_json(h);
    else
        out << write_system_text(h);
}

std::string system_digest(const SetSystem& h) {
    std::string canon = write_system_text(h);
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : canon) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

}  // namespace sunflower
