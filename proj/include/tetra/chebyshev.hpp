#pragma once

#include "tetra/polynomial.hpp"
#include "tetra/ring.hpp"

namespace tetra {

// Chebyshev polynomial of the second kind, by the three-term recurrence
// 2x*U_n = U_{n+1} + U_{n-1} with U_0 = 1 and U_{-1} = 0. Rejects n < -1.
Polynomial chebyshev_u(int n);

// U_n(1 - 2x) as a plain polynomial; degree exactly n for n >= 0.
Polynomial chebyshev_shifted_poly(int n);

// U_n(1 - 2T) as a RingElem (constant + T-part only).
RingElem chebyshev_shifted(int n);

}  // namespace tetra
