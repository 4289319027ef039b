#include "hx/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hx {

std::string to_text(const Family& f) {
    std::ostringstream out;
    out << "n=" << f.ground_set() << " k=" << f.arity() << "\n";
    for (std::uint64_t m : f.masks()) {
        bool first = true;
        for (int v : Edge::of_mask(m).vertices()) {
            if (!first)
                out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Family family_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    // header
    int n = -1, k = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (std::sscanf(line.c_str(), "n=%d k=%d", &n, &k) != 2)
            throw io_error("bad family header, expected \"n=<n> k=<k>\": " + line);
        break;
    }
    if (n < 0)
        throw io_error("empty family file");

    std::vector<std::uint64_t> masks;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> vs;
        int v;
        while (ls >> v)
            vs.push_back(v);
        if (!ls.eof())
            throw io_error("bad edge line: " + line);
        if (vs.empty())
            continue;
        std::uint64_t m = Edge::of(vs).mask();
        masks.push_back(m);
    }
    std::size_t distinct = masks.size();
    Family f = Family::of_masks(n, k, std::move(masks));
    if (f.size() != distinct)
        throw io_error("duplicate edge in family file");
    for (std::uint64_t m : f.masks())
        if (Edge::of_mask(m).max_label() > n)
            throw invalid_vertex_error("edge vertex outside ground set");
    return f;
}

nlohmann::json to_json(const Family& f) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::uint64_t m : f.masks())
        edges.push_back(Edge::of_mask(m).vertices());
    return nlohmann::json{{"n", f.ground_set()}, {"k", f.arity()}, {"edges", edges}};
}

Family family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("edges"))
        throw io_error("family JSON must be {\"n\":int,\"k\":int,\"edges\":[[int,...],...]}");
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer() || !j["edges"].is_array())
        throw io_error("family JSON has wrong field types");
    int n = j["n"].get<int>();
    int k = j["k"].get<int>();
    std::vector<std::uint64_t> masks;
    for (const auto& je : j["edges"]) {
        if (!je.is_array())
            throw io_error("family JSON edge is not an array");
        std::vector<int> vs;
        for (const auto& jv : je) {
            if (!jv.is_number_integer())
                throw io_error("family JSON vertex is not an integer");
            vs.push_back(jv.get<int>());
        }
        masks.push_back(Edge::of(vs).mask());
    }
    std::size_t distinct = masks.size();
    Family f = Family::of_masks(n, k, std::move(masks));
    if (f.size() != distinct)
        throw io_error("duplicate edge in family JSON");
    return f;
}

void save_family(const Family& f, const std::filesystem::path& path, FamilyFormat fmt) {
    if (fmt == FamilyFormat::json)
        write_file(path, to_json(f).dump() + "\n");
    else
        write_file(path, to_text(f));
}

Family load_family(const std::filesystem::path& path) {
    std::string data = read_file(path);
    std::size_t i = data.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && data[i] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(data);
        } catch (const nlohmann::json::exception& e) {
            throw io_error("cannot parse " + path.string() + ": " + e.what());
        }
        return family_from_json(j);
    }
    return family_from_text(data);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write " + path.string());
    out << contents;
    if (!out)
        throw io_error("write failed: " + path.string());
}

} // namespace hx
