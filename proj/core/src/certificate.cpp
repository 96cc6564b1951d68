#include "bihole/certificate.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace bihole {

bool verify_bihole(const BipartiteGraph& g, const BiHoleCertificate& c) {
    if (c.x_set.size() != c.y_set.size()) return false;
    for (int a : c.x_set)
        if (a < 0 || a >= g.size_a()) throw std::out_of_range("certificate: A index out of range");
    for (int b : c.y_set)
        if (b < 0 || b >= g.size_b()) throw std::out_of_range("certificate: B index out of range");

    auto has_dup = [](const std::vector<int>& v) {
        std::vector<int> s(v);
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) != s.end();
    };
    if (has_dup(c.x_set) || has_dup(c.y_set)) return false;

    Bitset ymask(static_cast<std::size_t>(g.size_b()));
    for (int b : c.y_set) ymask.set(static_cast<std::size_t>(b));
    for (int a : c.x_set)
        if ((g.row(a) & ymask).any()) return false;
    return true;
}

std::string certificate_to_json(const BiHoleCertificate& c) {
    nlohmann::json j;
    j["x"] = c.x_set;
    j["y"] = c.y_set;
    return j.dump();
}

BiHoleCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BiHoleCertificate c;
    c.x_set = j.at("x").get<std::vector<int>>();
    c.y_set = j.at("y").get<std::vector<int>>();
    return c;
}

BiHoleCertificate map_certificate(const BiHoleCertificate& c,
                                  const std::vector<int>& a_map,
                                  const std::vector<int>& b_map) {
    BiHoleCertificate out;
    out.x_set.reserve(c.x_set.size());
    out.y_set.reserve(c.y_set.size());
    for (int a : c.x_set) out.x_set.push_back(a_map.at(static_cast<std::size_t>(a)));
    for (int b : c.y_set) out.y_set.push_back(b_map.at(static_cast<std::size_t>(b)));
    std::sort(out.x_set.begin(), out.x_set.end());
    std::sort(out.y_set.begin(), out.y_set.end());
    return out;
}

}  // namespace bihole
