#include "langbench/algorithms.hpp"

#include <stdexcept>

namespace langbench {

void insertion_sort(std::span<double> v) { detail::insertion_sort_range(v, 0, v.size()); }

void merge_sort(std::span<double> v) { detail::merge_sort(v); }

void hybrid_sort(std::span<double> v, HybridConfig cfg) {
    if (cfg.threshold_k == 0) throw std::invalid_argument("hybrid_sort: threshold_k must be >= 1");
    detail::hybrid_sort(v, cfg);
}

}  // namespace langbench
