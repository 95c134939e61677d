#include "tdq/qseries.hpp"

namespace tdq {

Scalar qpochhammer(const Scalar& c, const Scalar& z, unsigned n) {
  Scalar result(1);
  Scalar term = c;
  for (unsigned k = 0; k < n; ++k) {
    result *= Scalar(1) - term;
    term *= z;
  }
  return result;
}

Scalar qnumber(long long n, const Scalar& q) {
  return (pow(q, n) - pow(q, -n)) / (q - q.inverse());
}

}  // namespace tdq
