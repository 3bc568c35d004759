#pragma once

#include <concepts>
#include <string>

#include "fglab/error.hpp"
#include "fglab/gf2.hpp"
#include "fglab/padic2.hpp"
#include "fglab/rat.hpp"

namespace fglab {

template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long n) { return Rat(n); }
  static Rat from_rat(const Rat& r) { return r; }
  static bool is_zero(const Rat& r) { return r.is_zero(); }
  static Rat inverse(const Rat& r) { return r.inverse(); }
  static std::string str(const Rat& r) { return r.str(); }
  static constexpr const char* name = "Q";
};

template <>
struct ring_traits<GF2> {
  static GF2 zero() { return GF2(0); }
  static GF2 one() { return GF2(1); }
  static GF2 from_int(long n) { return GF2(n); }
  static GF2 from_rat(const Rat& r) {
    try {
      return GF2::from_rat(r);
    } catch (const NotAUnit& e) {
      throw DivisionUndefined(e.what());
    }
  }
  static bool is_zero(GF2 g) { return g.is_zero(); }
  static GF2 inverse(GF2 g) { return g.inverse(); }
  static std::string str(GF2 g) { return g.bit() ? "1" : "0"; }
  static constexpr const char* name = "GF2";
};

/// Padic2 constants are exact integers; a rational constant with a non-trivial
/// denominator has no exact image and must be embedded with an explicit
/// precision through `Padic2::from_rat`.
template <>
struct ring_traits<Padic2> {
  static Padic2 zero() { return Padic2(0); }
  static Padic2 one() { return Padic2(1); }
  static Padic2 from_int(long n) { return Padic2(n); }
  static Padic2 from_rat(const Rat& r) {
    if (!r.is_integer()) throw DivisionUndefined(r.str() + " has no exact 2-adic image");
    return Padic2(r.num(), Padic2::kExact);
  }
  static bool is_zero(const Padic2& p) { return p.is_zero(); }
  static Padic2 inverse(const Padic2& p) {
    try {
      return padic_inverse(p);
    } catch (const NotAUnit& e) {
      throw DivisionUndefined(e.what());
    }
  }
  static std::string str(const Padic2& p) { return p.str(); }
  static constexpr const char* name = "Z2";
};

template <typename R>
concept CoeffRing = std::regular<R> && requires(R a, R b, long n, Rat q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { ring_traits<R>::zero() } -> std::same_as<R>;
  { ring_traits<R>::one() } -> std::same_as<R>;
  { ring_traits<R>::from_int(n) } -> std::same_as<R>;
  { ring_traits<R>::from_rat(q) } -> std::same_as<R>;
  { ring_traits<R>::is_zero(a) } -> std::same_as<bool>;
  { ring_traits<R>::inverse(a) } -> std::same_as<R>;
  { ring_traits<R>::str(a) } -> std::convertible_to<std::string>;
};

/// Reduction homomorphisms.
inline GF2 reduce_mod2(const Rat& r) { return GF2::from_rat(r); }
inline Padic2 embed_2adic(const Rat& r, int precision) { return Padic2::from_rat(r, precision); }

}  // namespace fglab
