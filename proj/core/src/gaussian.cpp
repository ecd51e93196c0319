#include "mixdisc/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace mixdisc {

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (rhs.im.is_zero()) {
    re /= rhs.re;
    im /= rhs.re;
    return *this;
  }
  const Rational d = rhs.norm2();
  *this *= rhs.conj();
  re /= d;
  im /= d;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.im.is_zero()) return os << z.re;
  return os << '(' << z.re << (z.im.sign() < 0 ? "-" : "+") << z.im.abs() << "i)";
}

}  // namespace mixdisc
