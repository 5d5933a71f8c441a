#pragma once

#include <cstdint>

#include "recross/kites.hpp"

namespace recross {

// Deterministic, portable stream generator; also used to derive per-task
// seeds so parallel and serial schedules agree.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

struct GenerationBudgetExceeded : std::runtime_error {
  GenerationBudgetExceeded(std::string msg, int n)
      : std::runtime_error(std::move(msg) + " after " + std::to_string(n) +
                           " attempts"),
        attempts(n) {}
  int attempts;
};

inline constexpr int kGenerationBudget = 100000;

// Random general-position drawing with points in [0, box]^2.
Drawing random_drawing(std::uint64_t seed, int n, std::int64_t box);

// Nested-triangle K9: peel [3,3,3].
Drawing generate_nested_k9(std::uint64_t seed);

// Nested-triangle K6 of the requested configuration class.
Drawing generate_nested_k6(std::uint64_t seed, ConfigClass cls);
Drawing generate_nested_k6_any(std::uint64_t seed);

enum class K10Shape { WhiteInGreen, WhiteInBlue, TriTriQuad };

// K10 shapes: nested K9 plus a vertex between the green and blue
// triangles (peel [3,3,4]), inside the blue triangle (peel [3,3,3,1]), or
// two nested triangles around a convex quadrilateral (peel [3,3,4]).
Drawing generate_k10(std::uint64_t seed, K10Shape shape);

// A 36-crossing nested K9: random orientation-preserving integer affine
// image of a known optimal drawing, then count-preserving perturbations.
Drawing generate_optimal_k9(std::uint64_t seed);

enum class K9Profile { Hull6, Hull5_1, Quad2 };  // peels [3,6], [3,5,1], [3,4,2]

Drawing generate_k9_profile(std::uint64_t seed, K9Profile profile);

// The 36-crossing reference drawing used as the perturbation base and in
// the test corpus (near-equilateral rings of radius 100/30/8).
const std::vector<Point>& optimal_k9_base();

}  // namespace recross
