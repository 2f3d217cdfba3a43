#pragma once

#include <cstdint>
#include <random>

#include "renyi/operator.hpp"

namespace renyi {

using Rng = std::mt19937_64;

// d x d matrix of independent standard complex Gaussians.
Matrix ginibre(Index dim, Rng& rng);

// Hilbert-Schmidt random mixed state G G^dagger / Tr(G G^dagger).
DensityMatrix random_density(Index dim, Rng& rng);

// (G + G^dagger)/2 scaled by `scale`.
HermitianOperator random_hermitian(Index dim, Rng& rng, double scale = 1.0);

// Haar unitary from the QR decomposition of a Ginibre matrix.
Matrix random_unitary(Index dim, Rng& rng);

}  // namespace renyi
