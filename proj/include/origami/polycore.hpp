#pragma once

// Exact univariate polynomial algebra over the integers and rationals.

#include "origami/cyclotomic.hpp"
#include "origami/factor.hpp"
#include "origami/gcd.hpp"
#include "origami/polynomial.hpp"
#include "origami/rational.hpp"
#include "origami/roots.hpp"
