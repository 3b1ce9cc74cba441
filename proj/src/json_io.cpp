#include "qzeta/json_io.hpp"

#include "qzeta/errors.hpp"

namespace qzeta {

Json to_json(const QPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

Json to_json(const RationalFunction& f) {
    Json out = Json::object();
    out["num"] = to_json(f.num());
    out["den"] = to_json(f.den());
    return out;
}

Json to_json(const LogScalar& a) {
    Json out = Json::object();
    out["rat"] = to_json(a.rat());
    out["log"] = to_json(a.log());
    return out;
}

QPoly qpoly_from_json(const Json& j) {
    if (!j.is_array())
        throw DomainError("polynomial JSON must be an array of rational strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_string())
            throw DomainError("polynomial coefficient must be a string");
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return QPoly(coeffs);
}

RationalFunction rational_function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw DomainError("rational function JSON needs 'num' and 'den'");
    return RationalFunction(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

LogScalar log_scalar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rat") || !j.contains("log"))
        throw DomainError("log scalar JSON needs 'rat' and 'log'");
    return LogScalar(rational_function_from_json(j.at("rat")), rational_function_from_json(j.at("log")));
}

} // namespace qzeta
