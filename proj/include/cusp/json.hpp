#ifndef CUSP_JSON_HPP
#define CUSP_JSON_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <cusp/ring.hpp>
#include <cusp/series.hpp>

namespace cusp
{

using json = nlohmann::ordered_json;

template <ExactRing R>
json to_json(const Series<R> &s)
{
    json coeffs = json::array();
    for (const R &c : s.coeffs()) {
        coeffs.push_back(render(c));
    }
    return json{{"order", s.order()}, {"ring", std::string(ring_traits<R>::name)}, {"coeffs", std::move(coeffs)}};
}

template <ExactRing R>
Series<R> series_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("ring") || !j.contains("coeffs")) {
        throw std::invalid_argument("series json: expected {order, ring, coeffs}");
    }
    if (j.at("ring").get<std::string>() != ring_traits<R>::name) {
        throw std::invalid_argument("series json: ring '" + j.at("ring").get<std::string>() + "' does not match '" +
                                    std::string(ring_traits<R>::name) + "'");
    }
    const int order = j.at("order").get<int>();
    const json &coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("series json: coeffs must hold order+1 entries");
    }
    std::vector<R> out;
    out.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        out.push_back(ring_traits<R>::parse(c.get<std::string>()));
    }
    return Series<R>(std::move(out), order);
}

} // namespace cusp

#endif
