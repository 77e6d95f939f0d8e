#pragma once

// Reproducible random inputs for property tests and the selftest suites.
// VIRCALC_SEED overrides the fixed default seed.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "vircalc/poly.hpp"

namespace vircalc {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

inline std::uint64_t seed_from_env() {
  if (const char* env = std::getenv("VIRCALC_SEED"); env && *env) {
    return std::stoull(env);
  }
  return kDefaultSeed;
}

class Random {
 public:
  explicit Random(std::uint64_t seed = seed_from_env()) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  /// Small nonzero-or-zero coefficient: integers in [-5,5], sometimes halves or thirds.
  Rational coefficient() {
    const int num = uniform(-5, 5);
    const int den = coin(0.75) ? 1 : uniform(2, 3);
    return Rational(num, den);
  }

  /// Random BiPoly with s-degree ≤ max_s, t-degree ≤ max_t and roughly `density` of the box filled.
  BiPoly bipoly(int max_s, int max_t, double density = 0.35) {
    std::vector<BiPoly::Term> terms;
    for (int a = 0; a <= max_s; ++a) {
      for (int c = 0; c <= max_t; ++c) {
        if (coin(density)) terms.emplace_back(BiExp{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c)}, coefficient());
      }
    }
    return BiPoly(std::move(terms));
  }

  BiPoly nonzero_bipoly(int max_s, int max_t, double density = 0.35) {
    BiPoly p;
    while (p.is_zero()) p = bipoly(max_s, max_t, density);
    return p;
  }

  UniPoly unipoly(int max_deg, double density = 0.5) {
    std::vector<UniPoly::Term> terms;
    for (int c = 0; c <= max_deg; ++c) {
      if (coin(density)) terms.emplace_back(static_cast<std::uint32_t>(c), coefficient());
    }
    return UniPoly(std::move(terms));
  }

  UniPoly nonzero_unipoly(int max_deg, double density = 0.5) {
    UniPoly p;
    while (p.is_zero()) p = unipoly(max_deg, density);
    return p;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace vircalc
