#include "fppq/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fppq {

namespace {

void check_odd_prime(int p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("Cyclotomic: order must be an odd prime, got " +
                                    std::to_string(p));
}

}  // namespace

Cyclotomic::Cyclotomic(int prime) : prime_(prime), coords_(prime - 1, Rational(0)) {
    check_odd_prime(prime);
}

Cyclotomic::Cyclotomic(int prime, const Rational& value) : Cyclotomic(prime) {
    coords_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(int prime, long long exponent) {
    check_odd_prime(prime);
    long long e = ((exponent % prime) + prime) % prime;
    QVec by_exponent(prime, Rational(0));
    by_exponent[static_cast<std::size_t>(e)] = 1;
    return from_coords(prime, reduce_exponents(prime, by_exponent));
}

Cyclotomic Cyclotomic::from_coords(int prime, QVec coords) {
    check_odd_prime(prime);
    if (coords.size() != static_cast<std::size_t>(prime - 1))
        throw std::invalid_argument("Cyclotomic: expected p-1 coordinates");
    Cyclotomic x(prime);
    x.coords_ = std::move(coords);
    return x;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational())
        throw std::domain_error("Cyclotomic: element is not rational: " + str());
    return coords_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    check_same_field(rhs);
    const std::size_t n = coords_.size();  // p-1
    const int p = prime_;
    // convolution over exponents 0..2p-4, then wrap with zeta^p = 1
    QVec by_exponent(p, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rhs.coords_[j] == 0) continue;
            std::size_t e = i + j;
            if (e >= static_cast<std::size_t>(p)) e -= p;
            by_exponent[e] += coords_[i] * rhs.coords_[j];
        }
    }
    coords_ = reduce_exponents(p, by_exponent);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    const std::size_t n = coords_.size();
    // column j of the multiplication-by-x matrix is x * zeta^j
    QMat mul(n, QVec(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Cyclotomic col = *this * zeta_power(prime_, static_cast<long long>(j));
        for (std::size_t i = 0; i < n; ++i) mul[i][j] = col.coords_[i];
    }
    QVec unit(n, Rational(0));
    unit[0] = 1;
    auto sol = solve_linear(std::move(mul), std::move(unit));
    if (!sol)
        throw std::logic_error("Cyclotomic: multiplication matrix singular for nonzero element");
    return from_coords(prime_, std::move(*sol));
}

Cyclotomic Cyclotomic::galois(long long k) const {
    const int p = prime_;
    long long r = ((k % p) + p) % p;
    if (r == 0) throw std::invalid_argument("Cyclotomic: galois exponent divisible by p");
    QVec by_exponent(p, Rational(0));
    for (std::size_t e = 0; e < coords_.size(); ++e) {
        if (coords_[e] == 0) continue;
        by_exponent[static_cast<std::size_t>((e * r) % p)] += coords_[e];
    }
    return from_coords(p, reduce_exponents(p, by_exponent));
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coords_.size(); ++e) {
        if (coords_[e] == 0) continue;
        if (!first) os << " + ";
        os << "(" << to_string(coords_[e]) << ")";
        if (e == 1) os << "*z";
        else if (e > 1) os << "*z^" << e;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

QVec Cyclotomic::reduce_exponents(int prime, const QVec& by_exponent) {
    // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    const std::size_t n = static_cast<std::size_t>(prime - 1);
    QVec out(n, Rational(0));
    const Rational& top = by_exponent[n];
    for (std::size_t e = 0; e < n; ++e) out[e] = by_exponent[e] - top;
    return out;
}

void Cyclotomic::check_same_field(const Cyclotomic& rhs) const {
    if (prime_ != rhs.prime_)
        throw std::invalid_argument("Cyclotomic: mixed cyclotomic orders " +
                                    std::to_string(prime_) + " and " +
                                    std::to_string(rhs.prime_));
}

}  // namespace fppq
