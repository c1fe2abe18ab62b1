#pragma once

// Umbrella header: exact Hankel determinant sequences of rational power
// series via generalized Sturm sequences and half-GCD, with H-continued
// fractions, Hankel signatures and real-root counting on top.

#include "hankel/euclid.hpp"
#include "hankel/field.hpp"
#include "hankel/hankel_dets.hpp"
#include "hankel/hfraction.hpp"
#include "hankel/oracles.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/prime_field.hpp"
#include "hankel/quadforms.hpp"
#include "hankel/quotients.hpp"
#include "hankel/rational.hpp"
#include "hankel/rational_function.hpp"
#include "hankel/text.hpp"
