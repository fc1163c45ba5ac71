#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace partopus {

// Polynomial over GF(2) in super-degree variables |name|, with x^2 = x.
// Sign exponents live here: (-1)^P.
class Parity {
public:
    using Monomial = std::vector<std::string>;  // sorted, unique; empty = 1

    Parity() = default;
    static Parity constant(long long v);
    static Parity var(const std::string& name);

    bool is_zero() const { return monos_.empty(); }
    bool is_constant() const;
    int constant_part() const { return monos_.count(Monomial{}) ? 1 : 0; }
    Parity without_constant() const;

    Parity operator+(const Parity& o) const;
    Parity operator*(const Parity& o) const;
    Parity& operator+=(const Parity& o) { return *this = *this + o; }

    Parity substitute(const std::map<std::string, Parity>& sub) const;
    int evaluate(const std::function<int(const std::string&)>& value) const;

    const std::set<Monomial>& monomials() const { return monos_; }
    std::set<std::string> variables() const;

    bool operator==(const Parity& o) const = default;
    std::strong_ordering operator<=>(const Parity& o) const;

    // "|a||z|+|b||z|"; "1" for the constant
    std::string str() const;
    nlohmann::json to_json() const;
    static Parity from_json(const nlohmann::json& j);

private:
    void toggle(const Monomial& m);
    std::set<Monomial> monos_;
};

}  // namespace partopus
