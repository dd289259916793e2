#include "fppq/lefschetz.hpp"

#include <stdexcept>
#include <string>

namespace fppq {

Rational lefschetz_coefficient(int p, long long i) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("lefschetz_coefficient: p must be an odd prime");
    if (i % p == 0)
        throw std::invalid_argument("lefschetz_coefficient: residue i must be prime to p");

    const Cyclotomic one(p, Rational(1));
    Cyclotomic sum(p);
    for (long long j = 1; j <= p - 1; ++j) {
        const Cyclotomic term =
            (one - Cyclotomic::zeta_power(p, j)) * (one - Cyclotomic::zeta_power(p, i * j));
        sum += term.inverse();
    }
    const Rational value = sum.rational_value() / Rational(p - 1);
    return value;
}

bool verify_trace_identity(int p) {
    if (p != 7)
        throw std::invalid_argument("verify_trace_identity: only the order-7 identity is defined");

    const Cyclotomic one(p, Rational(1));
    const auto zeta = [&](long long e) { return Cyclotomic::zeta_power(p, e); };

    // (1 + zeta + zeta^4)^3 * zeta^{-5}
    const Cyclotomic trace = one + zeta(1) + zeta(4);
    const Cyclotomic lhs = trace * trace * trace * zeta(-5);

    // 6w^3 + w^2 - 15w + 5 with w = zeta + zeta^{-1}
    const Cyclotomic w = zeta(1) + zeta(-1);
    const Cyclotomic rhs = Cyclotomic(p, Rational(6)) * w * w * w + w * w -
                           Cyclotomic(p, Rational(15)) * w + Cyclotomic(p, Rational(5));

    const bool equal = lhs == rhs;
    const bool real = lhs == lhs.galois(p - 1);  // fixed by zeta -> zeta^{-1}
    return equal && real;
}

}  // namespace fppq
