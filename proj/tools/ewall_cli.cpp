#include "ewall.h"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Options {
    std::string data_dir;
    std::string output;
    std::string format = "text";
    std::string type;
    bool verbose = false;

    std::string what = "B";
    bool t_ground = false, t_energy = false, t_sigma = false, t_maximal = false, t_perfect = false;
    std::string lambda = "L0";
    std::string model = "reduced";
    int depth = 3;
    bool hw_only = false;
    std::vector<std::string> only;
    std::string report;
    std::string element;
    int shift = 0;
};

using ContextPtr = std::unique_ptr<ew_context, decltype(&ew_context_free)>;

int exit_code(ew_status s) {
    switch (s) {
    case EW_OK: return 0;
    case EW_USAGE:
    case EW_BAD_TYPE:
    case EW_BAD_WEIGHT:
    case EW_NODE_NOT_MINUSCULE: return 2;
    default: return 1;
    }
}

int report_error(ew_status s, const ew_context* ctx) {
    std::cerr << "error " << ew_status_name(s) << ": " << (ctx ? ew_last_error(ctx) : "") << "\n";
    return exit_code(s);
}

bool emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        std::cerr << "error IO: cannot write " << path << "\n";
        return false;
    }
    return true;
}

// Takes ownership of a string returned by the library and writes it.
int finish(ew_status s, const ew_context* ctx, char* text, const std::string& path) {
    if (s != EW_OK) return report_error(s, ctx);
    std::string copy = text ? text : "";
    ew_free_string(text);
    return emit(copy, path) ? 0 : 1;
}

std::string table_choice(const Options& o) {
    std::vector<std::string> chosen;
    if (o.t_ground) chosen.push_back("ground");
    if (o.t_energy) chosen.push_back("energy");
    if (o.t_sigma) chosen.push_back("sigma");
    if (o.t_maximal) chosen.push_back("maximal");
    if (o.t_perfect) chosen.push_back("perfect");
    if (chosen.size() != 1) throw CLI::ValidationError("tables", "choose exactly one of --ground, --energy, --sigma, --maximal, --perfect");
    return chosen.front();
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Level 1 perfect crystals and Young walls of types E6, E7 and E8"};
    app.set_config("--config", "", "read options from a TOML or INI file");
    app.add_option("--data-dir", o.data_dir, "directory with patterns and reference tables")
        ->default_str(ew_default_data_dir());
    app.add_option("-o,--output", o.output, "write the result to this file instead of standard output");
    app.add_flag("-v,--verbose", o.verbose, "report timings on standard error");
    app.require_subcommand(1);
    app.fallthrough();

    const std::vector<std::string> types = {"E6", "E7", "E8"};
    const std::vector<std::string> formats = {"dot", "json", "csv", "text"};
    auto add_type = [&](CLI::App* sub) {
        sub->add_option("-t,--type", o.type, "E6, E7 or E8")->required()->check(CLI::IsMember(types));
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("-f,--format", o.format, "dot, json, csv or text")->check(CLI::IsMember(formats));
    };

    auto* build = app.add_subcommand("build", "export B, the column crystal C or B (x) B");
    add_type(build);
    add_format(build);
    build->add_option("--what", o.what, "B, C or BB")->check(CLI::IsMember({"B", "C", "BB"}));

    auto* tables = app.add_subcommand("tables", "computed tables marked PASS or FAIL against the reference data");
    add_type(tables);
    add_format(tables);
    tables->add_flag("--ground", o.t_ground, "ground state sequences and z-powers");
    tables->add_flag("--energy", o.t_energy, "energy function");
    tables->add_flag("--sigma", o.t_sigma, "the sigma table");
    tables->add_flag("--maximal", o.t_maximal, "maximal vectors of B (x) B (E8)");
    tables->add_flag("--perfect", o.t_perfect, "elements b^lambda and b_lambda");

    auto* enumerate = app.add_subcommand("enumerate", "walls or paths with per-weight counts");
    add_type(enumerate);
    add_format(enumerate);
    enumerate->add_option("-l,--lambda", o.lambda, "level 1 weight, e.g. L0");
    enumerate->add_option("-m,--model", o.model, "reduced, fock, path or fock-path")
        ->check(CLI::IsMember({"reduced", "fock", "path", "fock-path"}));
    enumerate->add_option("-d,--depth", o.depth, "depth bound");
    enumerate->add_flag("--hw-only", o.hw_only, "keep highest weight elements only");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--only", o.only, "check ids to run")->delimiter(',');
    verify->add_option("--report", o.report, "write the JSON report to this file");
    verify->add_option("-f,--format", o.format, "text (summary lines) or json (report)")
        ->check(CLI::IsMember({"text", "json"}));

    auto* column = app.add_subcommand("column", "Young columns");
    auto* show = column->add_subcommand("show", "render the column psi(b) of an element");
    column->require_subcommand(1);
    add_type(show);
    show->add_option("--class,--element", o.element, "label of an element of B")->required();
    show->add_option("--shift", o.shift, "z-power");

    auto* energy = app.add_subcommand("energy", "energy function");
    auto* dump = energy->add_subcommand("dump", "rows left, right, H");
    energy->require_subcommand(1);
    add_type(dump);
    add_format(dump);

    try {
        app.parse(argc, argv);
        if (*tables) table_choice(o);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ew_context* raw = nullptr;
    ew_status s = ew_context_new(o.data_dir.empty() ? nullptr : o.data_dir.c_str(), &raw);
    if (s != EW_OK) {
        std::cerr << "error " << ew_status_name(s) << ": cannot use data directory "
                  << (o.data_dir.empty() ? ew_default_data_dir() : o.data_dir) << "\n";
        return exit_code(s);
    }
    ContextPtr ctx(raw, ew_context_free);
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    char* text = nullptr;

    if (*build) {
        s = ew_build(ctx.get(), o.type.c_str(), o.what.c_str(), o.format.c_str(), &text);
        code = finish(s, ctx.get(), text, o.output);
    } else if (*tables) {
        s = ew_tables(ctx.get(), o.type.c_str(), table_choice(o).c_str(), o.format.c_str(), &text);
        code = finish(s, ctx.get(), text, o.output);
    } else if (*enumerate) {
        ew_enumerate_options opts{o.type.c_str(), o.lambda.c_str(), o.model.c_str(), o.depth, o.hw_only ? 1 : 0,
                                  o.format.c_str()};
        s = ew_enumerate(ctx.get(), &opts, &text);
        code = finish(s, ctx.get(), text, o.output);
    } else if (*verify) {
        std::vector<const char*> ids;
        for (const auto& id : o.only) ids.push_back(id.c_str());
        char* report = nullptr;
        char* summary = nullptr;
        int all_pass = 0;
        s = ew_verify(ctx.get(), ids.data(), ids.size(), &report, &summary, &all_pass);
        if (s != EW_OK) return report_error(s, ctx.get());
        std::string rep = report, sum = summary;
        ew_free_string(report);
        ew_free_string(summary);
        bool ok = emit(o.format == "json" ? rep : sum, o.output);
        if (ok && !o.report.empty()) ok = emit(rep, o.report);
        code = !ok ? 1 : all_pass ? 0 : 1;
    } else if (*show) {
        s = ew_column_show(ctx.get(), o.type.c_str(), o.element.c_str(), o.shift, &text);
        code = finish(s, ctx.get(), text, o.output);
    } else if (*dump) {
        s = ew_energy_dump(ctx.get(), o.type.c_str(), o.format.c_str(), &text);
        code = finish(s, ctx.get(), text, o.output);
    }

    if (o.verbose) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "done in " << ms.count() << " ms\n";
    }
    return code;
}
