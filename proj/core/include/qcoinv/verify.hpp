#pragma once

#include "qcoinv/groebner.hpp"
#include "qcoinv/report.hpp"

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace qcoinv {

struct VerifyOptions {
    int n = 0;
    int k = 0;
    std::vector<mpq_class> alpha;  // empty: defaults to (1, 2, ..., k)
    TermOrder order = TermOrder::neglex();
    std::uint64_t seed = 0;
    long budget = 200000;
    std::string cache_dir;  // empty disables the on-disk basis cache
    bool allow_large = false;
};

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct VerificationReport {
    std::string command;
    std::string statement;
    VerifyOptions options;
    Report report;
    bool resource_exceeded = false;  // budget was hit; report holds the partial run
    double wall_ms = 0;              // stderr only; the payload stays reproducible

    bool pass() const { return report.pass(); }
    std::string to_json() const;
    std::string to_tsv() const;
};

/// Statement ids accepted by run_verify.
const std::vector<std::string>& statement_ids();

/// Runs one verification statement at the given parameters.  Throws
/// usage_error for unknown ids or out-of-range parameters and
/// resource_error when the pair budget is exhausted.
VerificationReport run_verify(const std::string& statement, const VerifyOptions& opts);

struct TableResult {
    std::string json;
    std::string tsv;
};

/// Data emission: what is one of hilbert, grfrob, standard-monomials,
/// osp-count.
TableResult run_table(const std::string& what, const VerifyOptions& opts);

/// Default alpha list (1, 2, ..., k).
std::vector<mpq_class> default_alpha(int k);

/// neglex basis of the quotient ideal via Buchberger, memoized in-process
/// and optionally on disk under opts.cache_dir.
const GroebnerBasis& quotient_basis(int n, int k, const VerifyOptions& opts);

/// Hall-Littlewood + key-polynomial basis as a GroebnerBasis; S-pair
/// verified once per (n, k) for n <= 5, taken on faith above that.
const GroebnerBasis& hl_demazure_groebner(int n, int k, const VerifyOptions& opts);

/// Deterministic sample polynomials for relation checking.
std::vector<MPoly> random_polynomials(int n, int count, int max_degree, std::uint64_t seed);

/// Random S_n-closed point set with coordinates from {1, 2, 3}.
std::vector<std::vector<mpq_class>> random_symmetric_points(int n, std::uint64_t seed);

// GroebnerBasis (de)serialization used by the disk cache.
std::string basis_to_json(const GroebnerBasis& basis);
GroebnerBasis basis_from_json(const std::string& text);

}  // namespace qcoinv
