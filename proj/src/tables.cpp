#include "ew/tables.hpp"
#include "ew/error.hpp"

#include <fstream>
#include <sstream>

namespace ew {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        out.push_back(line.substr(first));
    }
    return out;
}

[[noreturn]] void bad_line(const std::string& path, const std::string& line) {
    throw Error(ErrorCode::data_invalid, path + ": cannot read line '" + line + "'");
}

int parse_weight_node(const std::string& s, const std::string& path, const std::string& line) {
    if (s.size() < 2 || s[0] != 'L') bad_line(path, line);
    try {
        return std::stoi(s.substr(1));
    } catch (const std::exception&) {
        bad_line(path, line);
    }
}

int parse_int(const std::string& s, const std::string& path, const std::string& line) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) bad_line(path, line);
        return v;
    } catch (const std::invalid_argument&) {
        bad_line(path, line);
    } catch (const std::out_of_range&) {
        bad_line(path, line);
    }
}

void load_ground(const std::string& path, ReferenceTables& t) {
    for (const std::string& line : read_lines(path)) {
        std::istringstream ls(line);
        std::string type, weight, field, v;
        if (!(ls >> type >> weight >> field)) bad_line(path, line);
        TypeTag tag = parse_type(type);
        int node = parse_weight_node(weight, path, line);
        GroundRow* row = nullptr;
        for (GroundRow& g : t.ground)
            if (g.type == tag && g.node == node) row = &g;
        if (!row) {
            t.ground.push_back({tag, node, {}, {}, {}});
            row = &t.ground.back();
        }
        while (ls >> v) {
            if (field == "b") row->b.push_back(v);
            else if (field == "H") row->h.push_back(parse_int(v, path, line));
            else if (field == "m") row->m.push_back(parse_int(v, path, line));
            else bad_line(path, line);
        }
    }
}

void load_sigma(const std::string& path, ReferenceTables& t) {
    for (const std::string& line : read_lines(path)) {
        std::istringstream ls(line);
        std::string type, b, c, p, extra;
        if (!(ls >> type >> b >> c >> p) || (ls >> extra)) bad_line(path, line);
        t.sigma.push_back({parse_type(type), b, c, parse_int(p, path, line)});
    }
}

void load_perfect(const std::string& path, ReferenceTables& t) {
    for (const std::string& line : read_lines(path)) {
        std::istringstream ls(line);
        std::string type, kind, weight, element;
        if (!(ls >> type >> kind >> weight) || !std::getline(ls >> std::ws, element)) bad_line(path, line);
        if (kind != "upper" && kind != "lower") bad_line(path, line);
        t.perfect.push_back({parse_type(type), kind == "upper", parse_weight_node(weight, path, line), element});
    }
}

void load_maximal(const std::string& path, ReferenceTables& t) {
    for (const std::string& line : read_lines(path)) {
        std::istringstream ls(line);
        std::string type, h, size, rest;
        if (!(ls >> type >> h >> size) || !std::getline(ls >> std::ws, rest)) bad_line(path, line);
        auto cut = rest.find(" (x) ");
        if (cut == std::string::npos) bad_line(path, line);
        MaximalEntry e;
        e.type = parse_type(type);
        e.h = parse_int(h, path, line);
        e.component_size = size == "-" ? -1 : parse_int(size, path, line);
        e.left = rest.substr(0, cut);
        e.right = rest.substr(cut + 5);
        t.maximal.push_back(e);
    }
}

} // namespace

const GroundRow* ReferenceTables::ground_row(TypeTag t, int node) const {
    for (const GroundRow& g : ground)
        if (g.type == t && g.node == node) return &g;
    return nullptr;
}

ReferenceTables load_tables(const std::string& data_dir) {
    ReferenceTables t;
    load_ground(data_dir + "/ground_states.table", t);
    load_sigma(data_dir + "/sigma.table", t);
    load_perfect(data_dir + "/perfect.table", t);
    load_maximal(data_dir + "/maximal_vectors.table", t);
    return t;
}

} // namespace ew
