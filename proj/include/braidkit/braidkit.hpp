#pragma once

// Umbrella header: braid words, the left canonical form, cyclic-subgroup
// membership, conjugacy searches, the cyclic amalgamation of two braid
// groups, and seeded key-agreement simulations.

#include "braidkit/amalgam.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/crypto.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/gwp.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/rng.hpp"
