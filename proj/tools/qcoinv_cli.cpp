#include "qcoinv/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

std::vector<mpq_class> parse_alpha(const std::string& csv) {
    std::vector<mpq_class> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw qcoinv::usage_error("empty entry in --alpha");
        mpq_class v;
        if (v.set_str(tok, 10) != 0) throw qcoinv::usage_error("bad rational '" + tok + "' in --alpha");
        v.canonicalize();
        out.push_back(std::move(v));
    }
    return out;
}

struct CommonFlags {
    std::string alpha_csv;
    std::string order = "neglex";
    std::string format = "json";

    void attach(CLI::App* cmd, qcoinv::VerifyOptions& opts) {
        cmd->add_option("--n", opts.n, "ambient variable count")->required();
        cmd->add_option("--k", opts.k, "number of blocks");
        cmd->add_option("--alpha", alpha_csv, "comma-separated distinct nonzero rationals, e.g. 1,2 or 1/2,-3");
        cmd->add_option("--order", order, "term order")->check(CLI::IsMember({"neglex", "deg-neglex"}));
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
        cmd->add_option("--seed", opts.seed, "seed for randomized checks");
        cmd->add_option("--budget", opts.budget, "S-pair budget for basis computations");
        cmd->add_option("--cache-dir", opts.cache_dir, "directory for cached bases");
        cmd->add_flag("--allow-large", opts.allow_large, "lift the default n caps");
    }

    void finish(qcoinv::VerifyOptions& opts) const {
        opts.alpha = parse_alpha(alpha_csv);
        opts.order = qcoinv::TermOrder::from_name(order);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for the Hecke action on ordered set partition quotients over Q(q)"};
    app.require_subcommand(1);

    qcoinv::VerifyOptions opts;
    CommonFlags flags;

    std::string statement_help = "one of:";
    for (const auto& id : qcoinv::statement_ids()) statement_help += " " + id;

    auto* verify = app.add_subcommand("verify", "run one verification statement");
    std::string statement;
    verify->add_option("statement", statement, statement_help)->required();
    flags.attach(verify, opts);

    auto* table = app.add_subcommand("table", "emit a data table");
    std::string what;
    table->add_option("what", what, "one of: hilbert grfrob standard-monomials osp-count")->required();
    flags.attach(table, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        flags.finish(opts);
        if (verify->parsed()) {
            qcoinv::VerificationReport vr = qcoinv::run_verify(statement, opts);
            std::cout << (flags.format == "tsv" ? vr.to_tsv() : vr.to_json() + "\n");
            std::cerr << statement << ": " << (vr.pass() ? "PASS" : "FAIL") << " (" << vr.report.checks.size()
                      << " checks, " << vr.report.failed() << " failed, " << vr.wall_ms << " ms)\n";
            if (vr.resource_exceeded) return 3;
            return vr.pass() ? 0 : 1;
        }
        qcoinv::TableResult t = qcoinv::run_table(what, opts);
        std::cout << (flags.format == "tsv" ? t.tsv : t.json + "\n");
        return 0;
    } catch (const qcoinv::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qcoinv::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
