#pragma once

#include "ew/model.hpp"

#include <map>
#include <stdexcept>
#include <memory>
#include <string>
#include <vector>

namespace ew {

// Malformed request: unknown format, crystal, table, model or check id.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { dot, json, csv, text };

Format parse_format(const std::string& s);

// Builds and caches one TypeModel per type from a data directory.
class Session {
public:
    explicit Session(std::string data_dir);
    const std::string& data_dir() const { return data_dir_; }
    const TypeModel& model(TypeTag t);

private:
    std::string data_dir_;
    std::map<TypeTag, std::unique_ptr<TypeModel>> models_;
};

// what: B, C or BB.
std::string cmd_build(Session& s, const std::string& type, const std::string& what, Format f);

// which: ground, energy, sigma, maximal or perfect; every row is marked PASS or FAIL against the data tables.
std::string cmd_tables(Session& s, const std::string& type, const std::string& which, Format f);

struct EnumerateRequest {
    std::string type;
    std::string lambda = "L0";
    std::string model = "reduced";   // reduced, fock, path or fock-path
    int depth = 3;
    bool hw_only = false;
    Format format = Format::text;
};

std::string cmd_enumerate(Session& s, const EnumerateRequest& r);

struct VerifyOutcome {
    std::string report;   // JSON
    std::string summary;  // one PASS/FAIL line per check
    bool pass = false;
};

VerifyOutcome cmd_verify(Session& s, const std::vector<std::string>& only);

// element: a label of B; shift: the z-power.
std::string cmd_column_show(Session& s, const std::string& type, const std::string& element, int shift);

std::string cmd_energy_dump(Session& s, const std::string& type, Format f);

} // namespace ew
