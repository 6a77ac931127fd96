#pragma once

#include "ew/columns.hpp"
#include "ew/model.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace ew {

struct CheckInfo {
    std::string id;
    std::string anchor;   // topic the check reproduces
};

// The fixed list of checks, in report order.
const std::vector<CheckInfo>& check_catalogue();

struct CheckResult {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string witness;
    nlohmann::json detail;
    long millis = 0;
};

struct VerifyConfig {
    std::string data_dir;
    std::vector<std::string> only;   // empty runs every check
};

// Throws bad_type style usage errors (ErrorCode::data_invalid) for unknown ids in only.
std::vector<CheckResult> run_verification(const VerifyConfig& config);
nlohmann::json verification_report(const std::vector<CheckResult>& results);

struct FaultSummary {
    int edges = 0;         // support edges of one period
    int redundant = 0;     // implied by the remaining edges, so the pattern does not change
    int detected = 0;      // deletions for which the isomorphism with B fails
    int recolourings = 0;
    int recolourings_detected = 0;
    std::vector<std::string> missed;
};

// Deletes each support edge (and recolours each slot) in turn and rebuilds the column crystal.
FaultSummary pattern_fault_injection(const TypeModel& m);

// True when the target of support edge index of the slot residue stays below it through the other edges.
bool support_edge_redundant(const ColumnPattern& p, int residue, int index);

} // namespace ew
