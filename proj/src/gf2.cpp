#include "fglab/gf2.hpp"

#include "fglab/error.hpp"

namespace fglab {

GF2 GF2::from_rat(const Rat& r) {
  if (mpz_even_p(r.den().get_mpz_t())) {
    throw NotAUnit("denominator of " + r.str() + " is even; no reduction mod 2");
  }
  return from_int(r.num());
}

GF2 GF2::inverse() const {
  if (!bit_) throw DivisionUndefined("0 has no inverse in GF(2)");
  return *this;
}

}  // namespace fglab
