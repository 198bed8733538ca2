#pragma once

#include "hla/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hla {

/// One failing instance of an identity: its name, the basis arguments, and
/// both sides as global coordinate vectors.
struct Witness {
    std::string identity;
    std::vector<std::string> arguments;
    Vector lhs;
    Vector rhs;
};

enum class Status { pass, fail, error };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    }
    return "error";
}

struct Check {
    std::string name;
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    std::string message;

    bool passed() const { return status == Status::pass; }
};

/// Ordered list of checks plus named integer dimensions and free-form notes.
struct Report {
    std::vector<Check> checks;
    std::vector<std::pair<std::string, long>> dimensions;
    std::vector<std::pair<std::string, std::string>> notes;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    Status status() const
    {
        for (const auto& c : checks)
            if (c.status == Status::error) return Status::error;
        return passed() ? Status::pass : Status::fail;
    }

    Check& add(std::string name, bool ok, std::string message = {})
    {
        checks.push_back(Check{std::move(name), ok ? Status::pass : Status::fail, {}, std::move(message)});
        return checks.back();
    }

    Check& add(Check c)
    {
        checks.push_back(std::move(c));
        return checks.back();
    }

    void append(const Report& other, const std::string& prefix = {})
    {
        for (auto c : other.checks) {
            if (!prefix.empty()) c.name = prefix + "." + c.name;
            checks.push_back(std::move(c));
        }
        for (auto [k, v] : other.dimensions) dimensions.emplace_back(prefix.empty() ? k : prefix + "." + k, v);
        for (auto [k, v] : other.notes) notes.emplace_back(prefix.empty() ? k : prefix + "." + k, v);
    }

    void note(std::string name, std::string text) { notes.emplace_back(std::move(name), std::move(text)); }

    void dimension(std::string name, long value) { dimensions.emplace_back(std::move(name), value); }

    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    long dimension_of(const std::string& name) const
    {
        for (const auto& [k, v] : dimensions)
            if (k == name) return v;
        return -1;
    }
};

} // namespace hla
