#pragma once

#include "fppq/cyclotomic.hpp"
#include "fppq/rational.hpp"

namespace fppq {

/// Weight a_i attached to an isolated fixed point of local type 1/p(1,i) in
/// the holomorphic fixed point formula:
///   a_i = (1/(p-1)) * sum_{j=1}^{p-1} 1 / ((1 - zeta^j)(1 - zeta^{ij})).
/// Evaluated from this definition in Q(zeta_p); throws if the sum fails to be
/// rational (which would mean an arithmetic bug, not bad input). The closed
/// forms a_1 = (5-p)/12 and a_2 = (11-p)/24 live in the tests as oracles.
Rational lefschetz_coefficient(int p, long long i);

/// Exact identity in Q(zeta_7): with w = zeta + zeta^{-1},
///   (1 + zeta + zeta^4)^3 / zeta^5 = 6w^3 + w^2 - 15w + 5,
/// and the left side is fixed by zeta -> zeta^{-1}, so it lies in the real
/// subfield Q(w). Returns true iff both hold. Only p = 7 is meaningful.
bool verify_trace_identity(int p = 7);

}  // namespace fppq
