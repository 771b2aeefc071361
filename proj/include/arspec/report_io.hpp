#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "spectrum.hpp"

namespace arspec {

/// One record per line: composition, radicand, eigenvalue pair. Closes with the characteristic polynomial.
inline void write_spectrum_text(std::ostream& os, const spectrum_report& rep) {
    for (const auto& r : rep.records) {
        os << to_string(r.mu) << '\t' << r.radicand.get_str() << '\t' << (r.paired ? "+-" : "")
           << r.approximation << '\n';
    }
    os << "charpoly\t" << to_string(rep.charpoly) << '\n';
}

inline nlohmann::ordered_json spectrum_json(const spectrum_report& rep) {
    nlohmann::ordered_json doc;
    doc["n"] = rep.n;
    doc["matrix"] = to_string(rep.which);
    auto records = nlohmann::ordered_json::array();
    for (const auto& r : rep.records) {
        nlohmann::ordered_json rec;
        rec["composition"] = r.mu.parts;
        rec["radicand"] = r.radicand.get_str();
        rec["approximation"] = r.approximation;
        rec["paired"] = r.paired;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : rep.charpoly.coeffs()) coeffs.push_back(c.get_str());
    doc["charpoly"] = std::move(coeffs);
    return doc;
}

} // namespace arspec
