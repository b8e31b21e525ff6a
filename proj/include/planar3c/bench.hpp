#pragma once

#include <string>
#include <vector>

#include "planar3c/ptas.hpp"

namespace planar3c {

struct BenchRow {
    int requested = 0;
    int vertices = 0;
    int edges = 0;
    int slices = 0;
    double median_seconds = 0;
    std::vector<double> samples;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// time(size i+1) / time(size i).
    std::vector<double> ratios;
    double median_ratio = 0;
};

/// Times the full pipeline (instance generation excluded) `repeat` times per
/// size, sequentially, and reports medians.
BenchReport run_bench(const std::string& family, const std::vector<int>& sizes, Mode mode, int k, int repeat,
                      const SolveOptions& options = {});

double median(std::vector<double> values);

}  // namespace planar3c
