#pragma once

#include <doctest.h>

#include <string_view>

#include "wgamma/interval.hpp"

namespace wgamma::test {

// Reference constants from an independent high-precision source (90+ digits,
// far beyond any working precision used in the tests).
inline constexpr std::string_view kE =
    "2.7182818284590452353602874713526624977572470936999595749669676277240766303535475945713821785";
inline constexpr std::string_view kSinh1 =
    "1.1752011936438014568823818505956008151557179813340958702295654130133075673043238956071174521";
inline constexpr std::string_view kLnSinh1 =
    "0.16143936157119563361011972844234937196280204461789897576338533955098707046207234411029279833";
inline constexpr std::string_view kOneMinusLnSqrt2Pi =
    "0.081061466795327258219670263594382360138602526362216587182848459517234304072739602305256701364";
inline constexpr std::string_view kSqrtPiHalf =
    "0.88622692545275801364908374167057259139877472806119356410690389492645564229551609068747532837";
inline constexpr std::string_view kLn2 =
    "0.693147180559945309417232121458176568075500134360255254120680009493393621969694715605863327";
inline constexpr std::string_view kBeta0 =
    "0.99981682038831777947530348206759219633845532815406267891891468854680003023217913159467740448";
inline constexpr std::string_view kW0At1 =
    "0.99965827239245490928239713295186198221378147598709752141489503449376387926408293104859891389";
inline constexpr std::string_view kW1At1 =
    "1.0001832131726000324662890226340392151183648233257495689873431946687327030047895912202014093";
inline constexpr std::string_view kLnGamma11 =
    "15.10441257307551529522570932925107037188225074429193647218890334338306398679937838938929589";
inline constexpr std::string_view kGamma8p25 =
    "8376.5123509199252322196023177865351961136810482793925872183193287983756058076975321682763137";

inline Real ref(std::string_view decimal, long precision_bits = 400) {
  return Real::parse(decimal, precision_bits);
}

// The enclosure must contain the reference value strictly inside (the
// reference is parsed at 400 bits, well past the enclosure's resolution).
inline void check_contains_ref(const Interval& enclosure, std::string_view decimal) {
  Real v = ref(decimal);
  CAPTURE(enclosure.str(30));
  CAPTURE(decimal);
  CHECK(enclosure.lo() <= v);
  CHECK(v <= enclosure.hi());
}

}  // namespace wgamma::test
