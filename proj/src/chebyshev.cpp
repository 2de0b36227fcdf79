#include "tetra/chebyshev.hpp"

#include <stdexcept>

namespace tetra {

Polynomial chebyshev_u(int n) {
    if (n < -1) throw std::invalid_argument("chebyshev_u: index below -1");
    if (n == -1) return Polynomial();
    Polynomial prev;                  // U_{-1}
    Polynomial cur(Rational(1));      // U_0
    Polynomial twox = Polynomial::monomial(2, 1);
    for (int k = 0; k < n; ++k) {
        Polynomial next = twox * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial chebyshev_shifted_poly(int n) {
    static const Polynomial arg({Rational(1), Rational(-2)});  // 1 - 2x
    return chebyshev_u(n).compose(arg);
}

RingElem chebyshev_shifted(int n) { return ring_from_poly(chebyshev_shifted_poly(n)); }

}  // namespace tetra
