#include "hecke/json_io.hpp"

namespace hecke {

Json to_json(const BigInt& z)
{
    if (z.fits_slong_p()) return Json{{"int", z.get_si()}};
    return Json{{"int", z.get_str()}};
}

Json to_json(const Rational& q)
{
    if (q.get_den() == 1) return to_json(BigInt(q.get_num()));
    return Json{{"rat", q.get_str()}};
}

Json to_json(const CyclotomicNumber& x)
{
    if (x.is_rational()) return to_json(x.coefficients()[0]);
    Json coeffs = Json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(c.get_str());
    return Json{{"m", x.field()}, {"coeffs", coeffs}};
}

Json to_json(const DirichletCharacter& chi)
{
    Json exps = Json::array();
    for (auto e : chi.exponents()) exps.push_back(e);
    return Json{{"modulus", chi.modulus()}, {"exponents", exps}, {"conductor", chi.conductor()}, {"parity", chi.parity()}};
}

namespace {

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) throw precondition_error("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

Rational rational_from_json(const Json& j)
{
    if (j.contains("int")) {
        const auto& v = j.at("int");
        if (v.is_string()) return parse_rational(v.get<std::string>());
        return Rational(BigInt(static_cast<long>(v.get<std::int64_t>())));
    }
    if (j.contains("rat")) return parse_rational(j.at("rat").get<std::string>());
    throw precondition_error("expected {\"int\": ...} or {\"rat\": ...}");
}

CyclotomicNumber cyclotomic_from_json(const Json& j)
{
    if (!j.contains("m")) return CyclotomicNumber(rational_from_json(j));
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CyclotomicNumber::from_coefficients(j.at("m").get<std::int64_t>(), std::move(coeffs));
}

DirichletCharacter character_from_json(const Json& j)
{
    auto group = UnitGroup::get(j.at("modulus").get<std::int64_t>());
    return DirichletCharacter(std::move(group), j.at("exponents").get<std::vector<std::int64_t>>());
}

} // namespace hecke
