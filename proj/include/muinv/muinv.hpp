// muinv.hpp — convenience umbrella header

#pragma once

#include "muinv/composition.hpp"
#include "muinv/involution.hpp"
#include "muinv/io.hpp"
#include "muinv/mu_involution.hpp"
#include "muinv/permutation.hpp"
#include "muinv/polynomial.hpp"
#include "muinv/poset.hpp"
#include "muinv/schubert.hpp"
#include "muinv/schubert_mu.hpp"
#include "muinv/verify.hpp"
