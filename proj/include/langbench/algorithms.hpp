#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "langbench/prng.hpp"

namespace langbench {

struct HybridConfig {
    std::size_t threshold_k = 128;
};

// The benchmarked entry points. They live in their own translation unit so
// the timed call stays opaque to the caller.
void insertion_sort(std::span<double> v);
void merge_sort(std::span<double> v);
void hybrid_sort(std::span<double> v, HybridConfig cfg);

namespace detail {

/// Shift-based insertion sort of v[lo, hi). Stable.
template <typename T>
void insertion_sort_range(std::span<T> v, std::size_t lo, std::size_t hi) {
    assert(lo <= hi && hi <= v.size());
    for (std::size_t i = lo + 1; i < hi; ++i) {
        T key = std::move(v[i]);
        std::size_t j = i;
        while (j > lo && key < v[j - 1]) {
            v[j] = std::move(v[j - 1]);
            --j;
        }
        v[j] = std::move(key);
    }
}

/// Merges the ascending runs v[lo, mid) and v[mid, hi) through `scratch`.
/// Ties go to the left run.
template <typename T>
void merge(std::span<T> v, std::size_t lo, std::size_t mid, std::size_t hi, std::span<T> scratch) {
    assert(lo <= mid && mid <= hi && hi <= v.size());
    assert(scratch.size() >= hi - lo);
    std::size_t i = lo, j = mid, out = 0;
    while (i < mid && j < hi) {
        if (v[j] < v[i])
            scratch[out++] = std::move(v[j++]);
        else
            scratch[out++] = std::move(v[i++]);
    }
    while (i < mid) scratch[out++] = std::move(v[i++]);
    while (j < hi) scratch[out++] = std::move(v[j++]);
    for (std::size_t k = 0; k < out; ++k) v[lo + k] = std::move(scratch[k]);
}

constexpr std::size_t midpoint(std::size_t lo, std::size_t hi) noexcept { return lo + (hi - lo) / 2; }

template <typename T>
void merge_sort_rec(std::span<T> v, std::size_t lo, std::size_t hi, std::span<T> scratch) {
    if (hi - lo < 2) return;
    const std::size_t mid = midpoint(lo, hi);
    merge_sort_rec(v, lo, mid, scratch);
    merge_sort_rec(v, mid, hi, scratch);
    detail::merge(v, lo, mid, hi, scratch);
}

template <typename T>
void hybrid_sort_rec(std::span<T> v, std::size_t lo, std::size_t hi, std::span<T> scratch, std::size_t k) {
    if (hi - lo <= k) {
        detail::insertion_sort_range(v, lo, hi);
        return;
    }
    const std::size_t mid = midpoint(lo, hi);
    hybrid_sort_rec(v, lo, mid, scratch, k);
    hybrid_sort_rec(v, mid, hi, scratch, k);
    detail::merge(v, lo, mid, hi, scratch);
}

template <typename T>
void merge_sort(std::span<T> v) {
    std::vector<T> scratch(v.size());
    merge_sort_rec(v, 0, v.size(), std::span<T>(scratch));
}

template <typename T>
void hybrid_sort(std::span<T> v, HybridConfig cfg) {
    assert(cfg.threshold_k >= 1);
    std::vector<T> scratch(v.size());
    hybrid_sort_rec(v, 0, v.size(), std::span<T>(scratch), cfg.threshold_k);
}

}  // namespace detail

using detail::insertion_sort_range;
using detail::merge;

}  // namespace langbench
