#include "sixvertex/numerics/prec_real.hpp"

#include <cstdio>
#include <memory>
#include <string>

#include "sixvertex/errors.hpp"

namespace sixvertex::numerics {

PrecReal PrecReal::parse(std::string_view text, Bits bits) {
  const std::string s(text);
  PrecReal r = PrecReal::zero(bits);
  if (s.empty()) throw DomainError("empty number");
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0' || !r.is_finite()) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

std::string PrecReal::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, v_);
  std::unique_ptr<char, void (*)(char*)> guard(buffer, [](char* p) { mpfr_free_str(p); });
  return std::string(buffer);
}

PrecReal const_pi(Bits bits) {
  auto r = PrecReal::zero(bits);
  mpfr_const_pi(r.get_mutable(), MPFR_RNDN);
  return r;
}

PrecReal const_log2(Bits bits) {
  auto r = PrecReal::zero(bits);
  mpfr_const_log2(r.get_mutable(), MPFR_RNDN);
  return r;
}

}  // namespace sixvertex::numerics
