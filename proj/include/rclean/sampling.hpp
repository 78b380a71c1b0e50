#pragma once

#include <random>

#include "rclean/ring.hpp"

namespace rclean {

// Deterministic pseudo-random elements for sampled checks. Zloc values are
// small fractions (|num| <= 60, den <= 24); residue rings sample uniformly.
Elem random_elem(const RingPtr& ring, std::mt19937_64& rng);
Elem random_unit(const RingPtr& ring, std::mt19937_64& rng);
Elem random_radical(const RingPtr& ring, std::mt19937_64& rng);

}  // namespace rclean
