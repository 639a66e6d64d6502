#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "coxaff/commands.hpp"

namespace {

struct GlobalOpts {
    bool json = false;
    bool quiet = false;
    std::string out;
};

std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("COXAFF_OUTDIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const coxaff::cmd::Result& res, const GlobalOpts& g) {
    std::string payload = g.json ? res.json.dump(2) + "\n" : res.text;
    if (!g.out.empty()) {
        auto path = resolve_out(g.out);
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << payload;
        if (!g.quiet) std::cout << "wrote " << path.string() << "\n";
        return;
    }
    if (!g.quiet) std::cout << payload;
}

}  // namespace

int main(int argc, char** argv) {
    using coxaff::Golden;
    using coxaff::GroupId;
    using coxaff::Rational;

    CLI::App app{"coxaff: exact affine extensions of the noncrystallographic "
                 "Coxeter groups H2, H3 and H4"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_flag("--json", g.json, "print machine-readable JSON");
    app.add_flag("--quiet", g.quiet, "suppress stdout");
    app.add_option("-o,--output", g.out,
                   "write output to a file (COXAFF_OUTDIR resolves relative paths)");

    std::string group = "h3", axis, format = "json", target, emit_kind = "matrix";
    std::string gamma_s = "1", delta_s, krange_s = "-3..3", file;
    std::vector<std::string> lengths;
    long bound = 12, kk = 0;
    int series = 1;
    bool count_only = false;

    auto* roots = app.add_subcommand("roots", "root system in the simple-root basis");
    roots->add_option("--group", group)->required();
    roots->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* grp = app.add_subcommand("group", "full reflection group");
    grp->add_option("--group", group)->required();
    grp->add_flag("--count-only", count_only, "emit the group order only");

    auto* enumerate = app.add_subcommand("enumerate", "extended Cartan matrix family");
    enumerate->add_option("--group", group);
    enumerate->add_option("--axis", axis)->required();
    enumerate->add_option("--k", krange_s, "k range a..b (default -3..3)");
    enumerate->add_option("--gamma", gamma_s);
    enumerate->add_option("--delta", delta_s, "defaults to the det-consistent value");
    enumerate->add_option("--series", series, "orbit index, 1-based");
    enumerate->add_option("--bound", bound);

    auto* solve = app.add_subcommand("solve", "solve xy = target over Z[tau]");
    solve->add_option("--target", target)->required();
    solve->add_option("--bound", bound);

    auto* verify = app.add_subcommand("verify", "check a matrix JSON file");
    verify->add_option("--file", file)->required()->check(CLI::ExistingFile);

    auto* op = app.add_subcommand("op", "exact affine operators for a family member");
    op->add_option("--axis", axis)->required();
    op->add_option("--k", kk);
    op->add_option("--gamma", gamma_s);
    op->add_option("--series", series);
    op->add_option("--emit", emit_kind)->check(CLI::IsMember({"matrix", "orbit"}));
    op->add_option("--bound", bound);

    std::string seed_name = "pentagon", out_format = "json";
    auto* array = app.add_subcommand("array", "translated point array of a seed");
    array->add_option("--group", group);
    array->add_option("--seed", seed_name)->required();
    array->add_option("--axis", axis)->required();
    array->add_option("--length", lengths, "exact length (repeatable: emits a scan table)")
        ->required();
    array->add_option("--out", out_format)->check(CLI::IsMember({"json", "csv", "svg"}));

    auto* len = app.add_subcommand("lengths", "classified translation-length tables");
    len->add_option("--group", group);
    len->add_option("--axis", axis)->required();
    std::string gamma_opt, k_opt;
    len->add_option("--gamma", gamma_opt, "preset multiplier (omit for all presets)");
    len->add_option("--delta", delta_s);
    len->add_option("--k", k_opt, "k range a..b");
    len->add_option("--bound", bound);

    CLI11_PARSE(app, argc, argv);

    try {
        coxaff::cmd::Result res;
        if (*roots) {
            res = coxaff::cmd::roots_cmd(coxaff::parse_group(group), format);
            if (format == "csv" && g.json) g.json = false;
        } else if (*grp) {
            res = coxaff::cmd::group_cmd(coxaff::parse_group(group), count_only);
        } else if (*enumerate) {
            std::optional<Rational> delta;
            if (!delta_s.empty()) delta = coxaff::parse_rational(delta_s);
            res = coxaff::cmd::enumerate_cmd(coxaff::parse_group(group), axis,
                                             coxaff::cmd::parse_krange(krange_s),
                                             coxaff::parse_rational(gamma_s), delta, series,
                                             bound);
        } else if (*solve) {
            res = coxaff::cmd::solve_cmd(target, bound);
        } else if (*verify) {
            std::ifstream f(file);
            coxaff::Json doc = coxaff::Json::parse(f);
            res = coxaff::cmd::verify_cmd(doc);
        } else if (*op) {
            res = coxaff::cmd::op_cmd(axis, kk, coxaff::parse_rational(gamma_s), series,
                                      emit_kind, bound);
        } else if (*array) {
            res = coxaff::cmd::array_cmd(coxaff::parse_group(group), seed_name, axis, lengths,
                                         out_format);
            if (out_format != "json") g.json = false;
        } else if (*len) {
            std::optional<Rational> gamma, delta;
            std::optional<coxaff::cmd::KRange> krange;
            if (!gamma_opt.empty()) gamma = coxaff::parse_rational(gamma_opt);
            if (!delta_s.empty()) delta = coxaff::parse_rational(delta_s);
            if (!k_opt.empty()) krange = coxaff::cmd::parse_krange(k_opt);
            res = coxaff::cmd::lengths_cmd(coxaff::parse_group(group), axis, gamma, delta,
                                           krange, bound);
        }
        emit(res, g);
    } catch (const std::exception& e) {
        if (g.json)
            std::cerr << coxaff::Json{{"error", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
