#pragma once

#include "ew/root_data.hpp"

#include <string>
#include <vector>

namespace ew {

// Transcribed reference tables shipped in the data directory.

struct GroundRow {
    TypeTag type = TypeTag::E6;
    int node = 0;
    std::vector<std::string> b;   // b_r from r = 0
    std::vector<int> h;           // H(b_(r+1) (x) b_r)
    std::vector<int> m;           // Fock z-powers m_r
};

struct SigmaEntry {
    TypeTag type = TypeTag::E6;
    std::string b;
    std::string c;
    int p = 0;
};

struct PerfectEntry {
    TypeTag type = TypeTag::E6;
    bool upper = false;   // b^lambda when true, b_lambda otherwise
    int node = 0;
    std::string element;
};

struct MaximalEntry {
    TypeTag type = TypeTag::E8;
    std::string left;
    std::string right;
    int h = 0;
    int component_size = -1;   // -1 when not listed
};

struct ReferenceTables {
    std::vector<GroundRow> ground;
    std::vector<SigmaEntry> sigma;
    std::vector<PerfectEntry> perfect;
    std::vector<MaximalEntry> maximal;

    const GroundRow* ground_row(TypeTag t, int node) const;
};

ReferenceTables load_tables(const std::string& data_dir);

} // namespace ew
