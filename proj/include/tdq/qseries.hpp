#pragma once

#include "tdq/scalar.hpp"

namespace tdq {

/// (c; z)_n = (1 - c)(1 - cz)...(1 - cz^{n-1}); the empty product is 1.
Scalar qpochhammer(const Scalar& c, const Scalar& z, unsigned n);

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1})
Scalar qnumber(long long n, const Scalar& q);

}  // namespace tdq
