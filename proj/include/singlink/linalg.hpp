#pragma once

#include <vector>

#include "singlink/base.hpp"

namespace singlink {

using IMat = std::vector<std::vector<Int>>;
using RMat = std::vector<std::vector<Rat>>;

// determinant by fraction-free elimination
Int mat_det(IMat a);

// symmetric input; checks sign(leading minor k) == (-1)^k for all k
bool is_negative_definite(const IMat& a);

// solves a*x = b for square nonsingular a; error otherwise
std::vector<Rat> solve_linear(RMat a, std::vector<Rat> b);

}  // namespace singlink
