#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace subheat::util {

// Pairwise (divide and conquer) summation. Error grows like log(n)*eps
// instead of n*eps, which keeps means of ~1e6 cells good to ~1e-14 relative.
double pairwise_sum(std::span<const double> v);

// Arithmetic mean via pairwise summation. Empty input is a bug in the caller.
double mean(std::span<const double> v);

// Least-squares fit y = a*x + b, returns {slope, intercept}.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// log(sum(exp(v_i))) without overflow; -inf for empty input.
double log_sum_exp(std::span<const double> v);

// Deterministic RNG wrapper. Every randomized routine takes one of these
// seeded explicitly so reruns are bit-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    double normal(double mu = 0.0, double sigma = 1.0) {
        return std::normal_distribution<double>(mu, sigma)(gen_);
    }
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// Number of worker threads: SUBHEAT_THREADS if set, else 1.
int thread_count();

// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
// using thread_count() workers. body must not touch overlapping state.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

// FNV-1a over a byte string; used for scenario hashes.
std::uint64_t fnv1a(const std::string& bytes);

} // namespace subheat::util
