#pragma once

#include <cstdint>

#include "ecg/graph.hpp"
#include "ecg/rational.hpp"
#include "ecg/verify.hpp"

namespace ecg {

// The sharpness family: X = {x_1..x_d} joined to an independent Y by colour
// c_i per x_i, rainbow inside X. delta^c = d exactly; the longest properly
// coloured path has length at most floor(3d/2).
EdgeColouredGraph gen_sharpness(int d, int n);

// Zero-slack eps-extremal pair: |A| = 2m, |B| = m, every a-b edge coloured
// c_a, rainbow inside A, B independent. Witness eps = 1/(36m+1).
std::pair<EdgeColouredGraph, ExtremalWitness> gen_eps_extremal_exact(int m);

// Randomized (delta,eps)-extremal instance with >= 1 vertex of margin on each
// of the (A1)-(A3) thresholds and delta^c >= ceil(delta*n). plant_z controls
// how many leftover vertices are wired Z-like (colour-c_a edges into A)
// instead of Y-like (fresh colours into A).
std::pair<EdgeColouredGraph, ExtremalWitness> gen_extremal(const Rational& delta,
                                                           const Rational& eps, int n,
                                                           std::uint64_t seed, int plant_z = 0);

// Seeded random dense graph recoloured until delta^c >= ceil(delta*n).
EdgeColouredGraph gen_random_mcd(int n, const Rational& delta, int colour_budget,
                                 std::uint64_t seed);

// Complete K_n coloured so that no colour appears more than k times at any
// vertex.
EdgeColouredGraph gen_locally_bounded(int n, int k, std::uint64_t seed);

} // namespace ecg
