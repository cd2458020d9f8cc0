#include "pgeom/scalar.hpp"

#include <atomic>
#include <stdexcept>

namespace pgeom {

namespace {
std::atomic<double> g_epsilon{1e-9};
}

double float_epsilon() { return g_epsilon.load(std::memory_order_relaxed); }

void set_float_epsilon(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
    g_epsilon.store(eps, std::memory_order_relaxed);
}

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
}

}  // namespace pgeom
