#pragma once

#include <cstddef>
#include <vector>

#include "core/graph.hpp"

namespace topo {

enum class SpectrumMethod { dense, iterative };

struct SpectrumOptions {
    std::size_t dense_threshold = 2000;  // full dense solve at or below this size
    double tolerance = 1e-8;             // iterative residual tolerance
    std::uint64_t rng_seed = 1;          // start-vector seed (iterative)
};

struct SpectrumResult {
    // Ordered by descending absolute value. Dense solves carry the full
    // spectrum of the largest component; iterative ones the top eigenvalues.
    std::vector<double> eigenvalues;
    std::size_t count_requested = 0;
    SpectrumMethod method = SpectrumMethod::dense;
    std::size_t component_n = 0;
    double coverage = 0.0;
    bool clamped = false;  // top_k exceeded the component size
};

// Adjacency spectrum of the largest connected component.
SpectrumResult spectrum(const Graph& g, std::size_t top_k, const SpectrumOptions& opts = {});

}  // namespace topo
