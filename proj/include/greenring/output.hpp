#pragma once

// JSON/CSV emission for the CLI.  One OutputRecord carries the command
// echo, its parameters, scalar results, and an optional table; the JSON and
// CSV encoders render exactly the same data.  Big integers and rationals
// are decimal strings ("a/b" for rationals); every float result key has a
// companion "<key>_err" bound where one is available.

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "greenring/green.hpp"
#include "greenring/ring.hpp"

namespace greenring::out {

using json = nlohmann::json;

inline std::string fmt_int(const Int& v) { return v.get_str(); }
inline std::string fmt_rat(const Rat& v) { return v.get_str(); }

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> scalars;
    std::vector<std::pair<std::string, json>> raws;  // structured results
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void scalar(const std::string& k, const std::string& v) { scalars.emplace_back(k, v); }
    void raw(const std::string& k, json v) { raws.emplace_back(k, std::move(v)); }
    void approx_scalar(const std::string& k, const Approx& a) {
        scalars.emplace_back(k, fmt_double(a.value));
        scalars.emplace_back(k + "_err", fmt_double(a.err));
    }

    json to_json() const {
        json j;
        j["command"] = command;
        j["params"] = json::object();
        for (const auto& [k, v] : params) j["params"][k] = v;
        j["results"] = json::object();
        for (const auto& [k, v] : scalars) j["results"][k] = v;
        for (const auto& [k, v] : raws) j["results"][k] = v;
        if (!columns.empty()) {
            j["columns"] = columns;
            j["rows"] = rows;
        }
        return j;
    }

    static OutputRecord from_json(const json& j) {
        OutputRecord r;
        r.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("params").items())
            r.params.emplace_back(k, v.get<std::string>());
        for (const auto& [k, v] : j.at("results").items()) {
            if (v.is_string()) r.scalars.emplace_back(k, v.get<std::string>());
            else r.raws.emplace_back(k, v);
        }
        if (j.contains("columns")) {
            r.columns = j.at("columns").get<std::vector<std::string>>();
            r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
        }
        return r;
    }

    // Same data as the JSON form: parameters and scalars as "# key=value"
    // comment lines, then the table (if any) as plain CSV.
    std::string to_csv() const {
        std::string s = "# command=" + command + "\n";
        for (const auto& [k, v] : params) s += "# param." + k + "=" + v + "\n";
        for (const auto& [k, v] : scalars) s += "# result." + k + "=" + v + "\n";
        for (const auto& [k, v] : raws) s += "# result." + k + "=" + v.dump() + "\n";
        if (!columns.empty()) {
            for (std::size_t i = 0; i < columns.size(); ++i)
                s += (i ? "," : "") + columns[i];
            s += "\n";
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i];
                s += "\n";
            }
        }
        return s;
    }
};

// RingElement <-> JSON: a list of [index, coefficient-as-decimal-string]
// pairs sorted by index (the map iterates in index order).
inline json element_to_json(const RingElement& e) {
    json out = json::array();
    for (const auto& [i, c] : e.coeffs()) out.push_back({i, c.get_str()});
    return out;
}

inline RingElement element_from_json(const json& j) {
    RingElement e;
    for (const auto& pair : j) {
        require(pair.is_array() && pair.size() == 2, "element JSON: expected [index, coeff] pairs");
        e.add(pair[0].get<std::int64_t>(), Int(pair[1].get<std::string>()));
    }
    return e;
}

inline json factorized_to_json(const green::FactorizedClass& c) {
    json j;
    j["base"] = c.base;
    j["levels"] = c.levels;
    return j;
}

inline green::FactorizedClass factorized_from_json(const json& j) {
    green::FactorizedClass c;
    c.base = j.at("base").get<int>();
    c.levels = j.at("levels").get<std::vector<int>>();
    return c;
}

}  // namespace greenring::out
