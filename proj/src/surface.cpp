#include "cheeger/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "cheeger/errors.hpp"
#include "cheeger/formulas.hpp"

namespace cheeger {

namespace {

using ordered_json = nlohmann::ordered_json;

int line_of_offset(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("missing field '" + std::string(key) + "' in " + where);
    }
    return *it;
}

double number_field(const ordered_json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number()) {
        throw ParseError("field '" + std::string(key) + "' in " + where + " must be a number");
    }
    return v.get<double>();
}

int int_field(const ordered_json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number_integer()) {
        throw ParseError("field '" + std::string(key) + "' in " + where + " must be an integer");
    }
    return v.get<int>();
}

}  // namespace

int euler_characteristic(const SurfaceDescription& s) {
    return 2 - 2 * s.genus - s.cusps;
}

void validate(const SurfaceDescription& s) {
    if (s.genus < 0) throw ValidationError("nonnegative genus", "genus is negative");
    if (s.cusps < 0) throw ValidationError("nonnegative cusps", "cusp count is negative");
    if (2 * s.genus - 2 + s.cusps <= 0) {
        throw ValidationError("hyperbolicity",
                              "2*genus - 2 + cusps must be positive (genus " +
                                  std::to_string(s.genus) + ", cusps " + std::to_string(s.cusps) +
                                  ")");
    }

    std::set<std::string> ids;
    for (const auto& g : s.geodesics) {
        if (!(g.length > 0.0) || !std::isfinite(g.length)) {
            throw ValidationError("positive geodesic length",
                                  "geodesic '" + g.id + "' has nonpositive length");
        }
        if (!ids.insert(g.id).second) {
            throw ValidationError("unique geodesic id", "duplicate geodesic id '" + g.id + "'");
        }
    }

    const int chi = euler_characteristic(s);
    for (std::size_t i = 0; i < s.splittings.size(); ++i) {
        const auto& sp = s.splittings[i];
        const std::string where = "splitting #" + std::to_string(i);
        if (sp.curve_ids.empty()) {
            throw ValidationError("nonempty curve set", where + " has no curves");
        }
        std::set<std::string> seen;
        for (const auto& id : sp.curve_ids) {
            if (!ids.count(id)) {
                throw ValidationError("known curve id",
                                      where + " references unknown geodesic '" + id + "'");
            }
            if (!seen.insert(id).second) {
                throw ValidationError("unique splitting curves",
                                      where + " lists geodesic '" + id + "' twice");
            }
        }
        if (sp.chi_a >= 0 || sp.chi_b >= 0) {
            throw ValidationError("negative side chi",
                                  where + " must have chi_A < 0 and chi_B < 0");
        }
        if (sp.chi_a + sp.chi_b != chi) {
            throw ValidationError("euler additivity",
                                  where + ": chi_A + chi_B = " +
                                      std::to_string(sp.chi_a + sp.chi_b) +
                                      " but chi(S) = " + std::to_string(chi));
        }
        if (!(sp.clearance > 0.0) || !std::isfinite(sp.clearance)) {
            throw ValidationError("positive clearance", where + " has nonpositive clearance");
        }
    }
}

SurfaceDescription parse_surface(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON near line " +
                         std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");

    SurfaceDescription s;
    s.genus = int_field(doc, "genus", "surface");
    s.cusps = int_field(doc, "cusps", "surface");

    if (auto it = doc.find("geodesics"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("field 'geodesics' must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto& g = (*it)[i];
            const std::string where = "geodesics[" + std::to_string(i) + "]";
            if (!g.is_object()) throw ParseError(where + " must be an object");
            const auto& id = field(g, "id", where);
            if (!id.is_string()) throw ParseError("field 'id' in " + where + " must be a string");
            s.geodesics.push_back({id.get<std::string>(), number_field(g, "length", where)});
        }
    }

    if (auto it = doc.find("splittings"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("field 'splittings' must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto& j = (*it)[i];
            const std::string where = "splittings[" + std::to_string(i) + "]";
            if (!j.is_object()) throw ParseError(where + " must be an object");
            Splitting sp;
            const auto& curves = field(j, "curves", where);
            if (!curves.is_array()) {
                throw ParseError("field 'curves' in " + where + " must be an array");
            }
            for (const auto& c : curves) {
                if (!c.is_string()) {
                    throw ParseError("entries of 'curves' in " + where + " must be strings");
                }
                sp.curve_ids.push_back(c.get<std::string>());
            }
            std::sort(sp.curve_ids.begin(), sp.curve_ids.end());
            sp.chi_a = int_field(j, "chi_A", where);
            sp.chi_b = int_field(j, "chi_B", where);
            sp.clearance = number_field(j, "clearance", where);
            s.splittings.push_back(std::move(sp));
        }
    }

    validate(s);
    return s;
}

std::string serialize_surface(const SurfaceDescription& s) {
    ordered_json doc;
    doc["genus"] = s.genus;
    doc["cusps"] = s.cusps;
    doc["geodesics"] = ordered_json::array();
    for (const auto& g : s.geodesics) {
        ordered_json jg;
        jg["id"] = g.id;
        jg["length"] = g.length;
        doc["geodesics"].push_back(std::move(jg));
    }
    doc["splittings"] = ordered_json::array();
    for (const auto& sp : s.splittings) {
        ordered_json js;
        js["curves"] = sp.curve_ids;
        js["chi_A"] = sp.chi_a;
        js["chi_B"] = sp.chi_b;
        js["clearance"] = sp.clearance;
        doc["splittings"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
}

double surface_area(const SurfaceDescription& s) {
    return 2.0 * std::numbers::pi * (2 * s.genus - 2 + s.cusps);
}

double splitting_length(const SurfaceDescription& s, const Splitting& sp) {
    double total = 0.0;
    for (const auto& id : sp.curve_ids) {
        auto it = std::find_if(s.geodesics.begin(), s.geodesics.end(),
                               [&](const Geodesic& g) { return g.id == id; });
        if (it == s.geodesics.end()) {
            throw ValidationError("known curve id", "splitting references unknown geodesic '" +
                                                        id + "'");
        }
        total += it->length;
    }
    return total;
}

std::vector<Splitting> admissible_collections(const SurfaceDescription& s, double budget) {
    if (!(budget > 0.0)) throw DomainError("budget must be positive");
    std::vector<std::pair<double, Splitting>> keyed;
    for (const auto& sp : s.splittings) {
        const double total = splitting_length(s, sp);
        if (total <= budget) keyed.emplace_back(total, sp);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.curve_ids < b.second.curve_ids;
    });
    std::vector<Splitting> out;
    out.reserve(keyed.size());
    for (auto& [total, sp] : keyed) out.push_back(std::move(sp));
    return out;
}

double length_upper_bound(const SurfaceDescription& s) {
    return length_upper_bound(surface_area(s), s.cusps);
}

}  // namespace cheeger
