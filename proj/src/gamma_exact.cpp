#include "hharm/gamma_exact.hpp"

#include <stdexcept>

namespace hharm {

GammaValue gamma_int_or_half(const Rational& x) {
    if (x <= 0) throw std::domain_error("gamma_int_or_half: argument must be positive");
    const Integer num = x.get_num(), den = x.get_den();
    if (den == 1) {
        unsigned long n = num.get_ui();
        return {Rational(factorial(n - 1)), 0};
    }
    if (den == 2) {
        // x = n + 1/2 with n = (num - 1) / 2
        unsigned long n = Integer((num - 1) / 2).get_ui();
        Integer four_n;
        mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
        Rational q(factorial(2 * n), four_n * factorial(n));
        q.canonicalize();
        return {q, 1};
    }
    throw std::domain_error("gamma_int_or_half: argument must be an integer or half-integer");
}

PiScalar beta_int_or_half(const Rational& x, const Rational& y) {
    GammaValue gx = gamma_int_or_half(x);
    GammaValue gy = gamma_int_or_half(y);
    GammaValue gxy = gamma_int_or_half(x + y);
    int s = gx.sqrt_pi_power + gy.sqrt_pi_power - gxy.sqrt_pi_power;
    if (s % 2 != 0) throw std::logic_error("beta_int_or_half: stray sqrt(pi) factor");
    Rational q = gx.rational_part * gy.rational_part / gxy.rational_part;
    return PiScalar::pi_term(GaussianRational(q), s / 2);
}

}  // namespace hharm
