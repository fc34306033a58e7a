#include "kerr/laguerre.hpp"

namespace kerr {
namespace {

// Generalized Laguerre recurrence for integer order alpha in {0, 1}.
Complex laguerre_recurrence(unsigned m, Complex z, double alpha) noexcept {
    Complex prev{1.0, 0.0};
    if (m == 0) return prev;
    Complex curr = Complex{1.0 + alpha, 0.0} - z;
    for (unsigned k = 1; k < m; ++k) {
        const double kd = static_cast<double>(k);
        const Complex next =
            ((Complex{2.0 * kd + 1.0 + alpha, 0.0} - z) * curr - (kd + alpha) * prev) / (kd + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

}  // namespace

Complex laguerre(unsigned m, Complex z) noexcept { return laguerre_recurrence(m, z, 0.0); }

Complex laguerre_assoc1(unsigned m, Complex z) noexcept { return laguerre_recurrence(m, z, 1.0); }

}  // namespace kerr
