#include "partopus/parity.hpp"

#include <algorithm>

namespace partopus {

Parity Parity::constant(long long v) {
    Parity p;
    if (v % 2 != 0) p.monos_.insert(Monomial{});
    return p;
}

Parity Parity::var(const std::string& name) {
    Parity p;
    p.monos_.insert(Monomial{name});
    return p;
}

bool Parity::is_constant() const { return monos_.empty() || (monos_.size() == 1 && monos_.begin()->empty()); }

Parity Parity::without_constant() const {
    Parity p = *this;
    p.monos_.erase(Monomial{});
    return p;
}

void Parity::toggle(const Monomial& m) {
    auto it = monos_.find(m);
    if (it == monos_.end())
        monos_.insert(m);
    else
        monos_.erase(it);
}

Parity Parity::operator+(const Parity& o) const {
    Parity r = *this;
    for (const auto& m : o.monos_) r.toggle(m);
    return r;
}

Parity Parity::operator*(const Parity& o) const {
    Parity r;
    for (const auto& a : monos_)
        for (const auto& b : o.monos_) {
            Monomial m;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
            r.toggle(m);
        }
    return r;
}

Parity Parity::substitute(const std::map<std::string, Parity>& sub) const {
    Parity r;
    for (const auto& m : monos_) {
        Parity term = constant(1);
        for (const auto& v : m) {
            auto it = sub.find(v);
            term = term * (it == sub.end() ? var(v) : it->second);
        }
        r += term;
    }
    return r;
}

int Parity::evaluate(const std::function<int(const std::string&)>& value) const {
    int acc = 0;
    for (const auto& m : monos_) {
        int t = 1;
        for (const auto& v : m) t &= (value(v) & 1);
        acc ^= t;
    }
    return acc;
}

std::set<std::string> Parity::variables() const {
    std::set<std::string> out;
    for (const auto& m : monos_) out.insert(m.begin(), m.end());
    return out;
}

std::strong_ordering Parity::operator<=>(const Parity& o) const {
    return std::lexicographical_compare_three_way(monos_.begin(), monos_.end(), o.monos_.begin(), o.monos_.end());
}

std::string Parity::str() const {
    if (monos_.empty()) return "0";
    std::string out;
    for (const auto& m : monos_) {
        if (!out.empty()) out += "+";
        if (m.empty()) {
            out += "1";
            continue;
        }
        for (const auto& v : m) out += "|" + v + "|";
    }
    return out;
}

nlohmann::json Parity::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& m : monos_) j.push_back(m);
    return j;
}

Parity Parity::from_json(const nlohmann::json& j) {
    Parity p;
    for (const auto& m : j) {
        auto vs = m.get<std::vector<std::string>>();
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        p.toggle(vs);
    }
    return p;
}

}  // namespace partopus
