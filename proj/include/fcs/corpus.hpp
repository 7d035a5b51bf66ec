#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fcs/graph.hpp"
#include "fcs/instance.hpp"

namespace fcs::corpus {

using Rng = std::mt19937_64;

/// Every graph on n vertices (n <= 8), one per isomorphism class.
std::vector<Graph> all_graphs(std::size_t n);

/// Every connected graph on n vertices (n <= 8), one per isomorphism class.
/// Counts for n = 1..7: 1, 1, 2, 6, 21, 112, 853.
std::vector<Graph> connected_graphs(std::size_t n);

/// Random spanning tree plus each remaining pair independently with probability p.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// Uniform f(v) in [1, d(v)+1].
std::vector<Threshold> random_thresholds(const Graph& g, Rng& rng);

/// Uniform f(v) in [1, min(d(v)+1, cap)].
std::vector<Threshold> random_thresholds(const Graph& g, Threshold cap, Rng& rng);

Instance random_instance(std::size_t n, double p, std::size_t k, Rng& rng);

/// Calls visit(f) for every valid threshold vector with f(v) <= min(d(v)+1, cap), in
/// lexicographic order. Stops early when visit returns false.
void for_each_threshold_vector(const Graph& g, Threshold cap,
                               const std::function<bool(const std::vector<Threshold>&)>& visit);

/// Uniform random graph on n vertices with each pair present with probability p.
Graph random_graph(std::size_t n, double p, Rng& rng);

}  // namespace fcs::corpus
