#include "hyperquot/json_io.hpp"

#include "hyperquot/errors.hpp"

namespace hq {

using nlohmann::json;

namespace {

std::string decimal(const Integer& c)
{
    return c.str();
}

Integer parse_decimal(const json& j)
{
    if (!j.is_string())
        throw InvalidInput("coefficient must be a decimal string");
    const auto& text = j.get_ref<const std::string&>();
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
        throw InvalidInput("malformed decimal '" + text + "'");
    return Integer(text);
}

template <class T>
T checked_get(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad value for '") + key + "': " + e.what());
    }
}

} // namespace

json to_json(const EPoly& p)
{
    json out = json::array();
    for (const auto& t : p.terms())
        out.push_back(json{{"pu", t.pu}, {"pv", t.pv}, {"c", decimal(t.c)}});
    return out;
}

json to_json(const LaurentPoly& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json{{"e", e}, {"c", decimal(c)}});
    return out;
}

json to_json(const Window& w)
{
    return json{{"lo", w.lo()}, {"hi", w.hi()}};
}

json to_json(const MSeries& s)
{
    json terms = json::array();
    s.for_each_term([&](const Degree& d, const EPoly& c) { terms.push_back(json{{"d", d}, {"coeff", to_json(c)}}); });
    return json{{"window", to_json(s.window())}, {"terms", std::move(terms)}};
}

json to_json(const SpecializedSeries& s, bool integer_coefficients)
{
    json terms = json::array();
    s.for_each_term([&](const Degree& d, const LaurentPoly& c) {
        json coeff = integer_coefficients ? json(decimal(c.coefficient(0))) : to_json(c);
        terms.push_back(json{{"d", d}, {"coeff", std::move(coeff)}});
    });
    return json{{"window", to_json(s.window())}, {"terms", std::move(terms)}};
}

EPoly epoly_from_json(const json& j)
{
    if (!j.is_array())
        throw InvalidInput("EPoly JSON must be an array");
    std::vector<Term> terms;
    for (const auto& t : j)
        terms.push_back(Term{checked_get<int>(t, "pu"), checked_get<int>(t, "pv"), parse_decimal(t.at("c"))});
    return EPoly::from_terms(std::move(terms));
}

LaurentPoly laurent_from_json(const json& j)
{
    if (!j.is_array())
        throw InvalidInput("polynomial JSON must be an array");
    std::vector<std::pair<int, Integer>> terms;
    for (const auto& t : j)
        terms.emplace_back(checked_get<int>(t, "e"), parse_decimal(t.at("c")));
    return LaurentPoly::from_terms(std::move(terms));
}

Window window_from_json(const json& j)
{
    return Window(checked_get<Degree>(j, "lo"), checked_get<Degree>(j, "hi"));
}

MSeries mseries_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("window") || !j.contains("terms"))
        throw InvalidInput("series JSON needs 'window' and 'terms'");
    MSeries out(window_from_json(j.at("window")));
    for (const auto& t : j.at("terms")) {
        auto d = checked_get<Degree>(t, "d");
        if (!out.window().contains(d))
            throw InvalidInput("term degree outside window");
        out.add_term(d, epoly_from_json(t.at("coeff")));
    }
    return out;
}

} // namespace hq
