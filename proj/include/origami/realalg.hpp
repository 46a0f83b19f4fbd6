#pragma once

// Exact real algebraic numbers: field arithmetic, square and real cube roots, roots of polynomials
// with algebraic coefficients.

#include "origami/algebraic_real.hpp"
#include "origami/root_of.hpp"
