#ifndef COEP_EXPM_HPP
#define COEP_EXPM_HPP

#include "coep/matrix.hpp"

namespace coep {

// Matrix exponential by scaling and squaring with diagonal Pade
// approximants (orders 3/5/7/9/13 selected from the 1-norm).
CMat matrix_exp(const CMat& a);

} // namespace coep

#endif
