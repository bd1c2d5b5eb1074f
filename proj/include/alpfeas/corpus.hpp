#pragma once

#include "alpfeas/model.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace alpfeas {

/// Shape of randomly generated desk-scale systems. Coefficients are
/// drawn from [-coeff_range, coeff_range]; a fraction of rows repeat or
/// negate earlier rows so that implied equalities and on-hyperplane
/// inequations (the hard corner of the reduction) appear in the corpus.
struct CorpusParams {
    int max_vars = 4;
    int max_le = 3;
    int max_lt = 2;
    int max_ne = 3;
    long coeff_range = 3;
    bool allow_eq = true;
};

/// Deterministic for a given generator state across platforms (no
/// std::uniform_int_distribution).
LinearSystem random_system(std::mt19937_64& rng, const CorpusParams& params);

/// One bench record; everything here is deterministic for a given seed,
/// so the CSV built from these rows is byte-stable across runs and jobs
/// settings (timings are reported separately).
struct BenchRow {
    int index = 0;
    int n_vars = 0;
    int p = 0;
    int q = 0;
    int r = 0;
    int eq = 0;
    std::string verdict;
    std::string oracle_verdict;
    bool agree = false;
    int alp_count = 0;
    long oracle_cases = 0;
    std::string k0;    // empty when infeasible
    std::string error; // empty normally; records per-instance limit errors
};

struct BenchResult {
    std::vector<BenchRow> rows;
    int agreements = 0;
    int errors = 0;
    double wall_seconds = 0.0;
};

BenchResult run_bench(std::uint64_t seed, int count, const CorpusParams& params, int jobs = 1);

/// Fixed-column CSV of the deterministic fields.
std::string bench_csv(const BenchResult& result);

} // namespace alpfeas
