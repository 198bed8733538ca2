#pragma once

#include "hla/report.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace hla {

inline const char* report_format_version = "1";

inline nlohmann::ordered_json vector_json(const Vector& v)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& s : v) out.push_back(to_string(s));
    return out;
}

inline nlohmann::ordered_json to_json(const Report& r, const std::string& command)
{
    nlohmann::ordered_json j;
    j["format_version"] = report_format_version;
    j["command"] = command;
    j["status"] = to_string(r.status());
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        if (!c.message.empty()) cj["message"] = c.message;
        cj["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : c.witnesses)
            cj["witnesses"].push_back(nlohmann::ordered_json{{"identity", w.identity},
                                                             {"arguments", w.arguments},
                                                             {"lhs", vector_json(w.lhs)},
                                                             {"rhs", vector_json(w.rhs)}});
        j["checks"].push_back(std::move(cj));
    }
    j["dimensions"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.dimensions) j["dimensions"][k] = v;
    if (!r.notes.empty()) {
        j["notes"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.notes) j["notes"][k] = v;
    }
    return j;
}

inline std::string vector_text(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

/// Human-readable form; at most `max_witnesses` witnesses per check are listed.
inline std::string to_text(const Report& r, const std::string& command, std::size_t max_witnesses = 5)
{
    std::ostringstream os;
    os << command << ": " << to_string(r.status()) << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << to_string(c.status) << "] " << c.name;
        if (!c.message.empty()) os << "  (" << c.message << ")";
        os << "\n";
        for (std::size_t n = 0; n < c.witnesses.size() && n < max_witnesses; ++n) {
            const Witness& w = c.witnesses[n];
            os << "      " << w.identity << " at (";
            for (std::size_t i = 0; i < w.arguments.size(); ++i) os << (i ? ", " : "") << w.arguments[i];
            os << ")";
            if (!w.lhs.empty() || !w.rhs.empty()) os << ": lhs " << vector_text(w.lhs) << " rhs " << vector_text(w.rhs);
            os << "\n";
        }
        if (c.witnesses.size() > max_witnesses)
            os << "      ... " << c.witnesses.size() - max_witnesses << " more\n";
    }
    for (const auto& [k, v] : r.dimensions) os << "  " << k << " = " << v << "\n";
    for (const auto& [k, v] : r.notes) {
        std::string flat = v;
        while (!flat.empty() && flat.back() == '\n') flat.pop_back();
        for (std::size_t p = flat.find('\n'); p != std::string::npos; p = flat.find('\n', p)) flat.replace(p, 1, "; ");
        os << "  " << k << ": " << flat << "\n";
    }
    return os.str();
}

} // namespace hla
