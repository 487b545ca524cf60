#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace hyperhom {

// Always kept canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan elimination over the rationals. Returns nullopt when the square
// matrix `a` is singular; throws std::invalid_argument on shape mismatch.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

bool is_integral(const Rational& q);

}  // namespace hyperhom
