#pragma once

#include <vector>

#include "partopus/master_identity.hpp"
#include "partopus/models.hpp"

namespace partopus {

// One Type I picture: a bubble on the lines of the target.
struct Bubble {
    int first_line = 0;
    std::vector<int> start;  // first point inside, per touched line
    std::vector<int> count;  // points inside, per touched line (all >= 1)
};

std::vector<Bubble> enumerate_bubbles(const Partition& target);
Partition bubble_inner(const Bubble& b);
Partition bubble_outer(const Partition& target, const Bubble& b);

// random homogeneous m(pi) for every symbol the target's identity can use,
// random inhomogeneous generators a, b, ...
Binding random_binding(const Partition& target, const GradedBasis& basis, Rng& rng);

// the identity evaluated picture by picture with concrete signs
Vec numeric_identity(const Partition& target, const Binding& b, bool type_ii_coefficients = true);

// symbolic identity realized vs numeric_identity on random bindings, plus
// the A-infinity components vanishing on the super-matrix dga
SuiteReport coherence_suite(const std::vector<Partition>& targets, std::uint64_t seed, int bindings = 10);

}  // namespace partopus
