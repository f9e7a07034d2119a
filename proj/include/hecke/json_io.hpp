// JSON encodings of exact values and characters.
//
//   rational        {"int": v} when integral (v a JSON number if it fits 64 bits, else a decimal string)
//                   {"rat": "p/q"} otherwise
//   cyclotomic      as a rational when it lies in Q, else {"m": m, "coeffs": ["p/q", ...]} in the
//                   power basis of Q(zeta_m)
//   character       {"modulus": N, "exponents": [...], "conductor": c, "parity": +-1}

#ifndef HECKE_JSON_IO_HPP
#define HECKE_JSON_IO_HPP

#include <json.hpp>

#include "hecke/arith.hpp"
#include "hecke/characters.hpp"
#include "hecke/cyclotomic.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& z);
Json to_json(const Rational& q);
Json to_json(const CyclotomicNumber& x);
Json to_json(const DirichletCharacter& chi);

Rational rational_from_json(const Json& j);
CyclotomicNumber cyclotomic_from_json(const Json& j);
DirichletCharacter character_from_json(const Json& j);

} // namespace hecke

#endif
