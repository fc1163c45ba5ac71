#include "partopus/formal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace partopus {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

Expr Expr::generator(std::string name, std::optional<int> super) {
    Expr e;
    e.head = std::move(name);
    e.gen = true;
    e.super = super;
    return e;
}

Expr Expr::apply(std::string name, std::optional<int> super, std::vector<std::vector<Expr>> slots) {
    Expr e;
    e.head = std::move(name);
    e.gen = false;
    e.super = super;
    e.slots = std::move(slots);
    if (e.slots.empty()) throw std::invalid_argument("application needs at least one slot");
    return e;
}

Parity Expr::self_parity() const { return super ? Parity::constant(*super) : Parity::var(head); }

Parity Expr::total_parity() const {
    Parity p = self_parity();
    for (const auto& s : slots)
        for (const auto& c : s) p += c.total_parity();
    return p;
}

Partition Expr::type() const {
    if (gen) return Partition{0};
    std::vector<int> sz;
    for (const auto& s : slots) sz.push_back(static_cast<int>(s.size()));
    return Partition(sz);
}

std::size_t Expr::arity() const {
    std::size_t n = 0;
    for (const auto& s : slots) n += s.size();
    return n;
}

std::vector<const Expr*> Expr::flat_args() const {
    std::vector<const Expr*> out;
    for (const auto& s : slots)
        for (const auto& c : s) out.push_back(&c);
    return out;
}

std::size_t Expr::node_count() const {
    std::size_t n = 1;
    for (const auto& s : slots)
        for (const auto& c : s) n += c.node_count();
    return n;
}

namespace {

std::string render(const Expr& e, bool tex) {
    auto esc = [&](const std::string& s) {
        if (!tex) return s;
        std::string o;
        for (char ch : s) {
            if (ch == '|')
                o += "\\mid ";
            else if (ch == '#')
                o += "\\#";
            else
                o += ch;
        }
        return o;
    };
    if (e.gen) return esc(e.head);
    std::string out = esc(e.head) + "(";
    for (std::size_t k = 0; k < e.slots.size(); ++k) {
        if (k) out += tex ? "\\mid " : "|";
        for (std::size_t l = 0; l < e.slots[k].size(); ++l) {
            if (l) out += ",";
            out += render(e.slots[k][l], tex);
        }
    }
    return out + ")";
}

}  // namespace

std::string Expr::str() const { return render(*this, false); }
std::string Expr::latex() const { return render(*this, true); }

nlohmann::json Expr::to_json() const {
    nlohmann::json j;
    if (gen) {
        j["gen"] = head;
        if (super) j["super"] = *super;
        return j;
    }
    j["head"] = head;
    if (super) j["super"] = *super;
    nlohmann::json ss = nlohmann::json::array();
    for (const auto& s : slots) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : s) cs.push_back(c.to_json());
        ss.push_back(cs);
    }
    j["slots"] = ss;
    return j;
}

Expr Expr::from_json(const nlohmann::json& j) {
    std::optional<int> sup;
    if (j.contains("super")) sup = j.at("super").get<int>();
    if (j.contains("gen")) return generator(j.at("gen").get<std::string>(), sup);
    std::vector<std::vector<Expr>> slots;
    for (const auto& s : j.at("slots")) {
        std::vector<Expr> cs;
        for (const auto& c : s) cs.push_back(from_json(c));
        slots.push_back(std::move(cs));
    }
    return apply(j.at("head").get<std::string>(), sup, std::move(slots));
}

int compare(const Expr& a, const Expr& b) {
    if (int c = a.head.compare(b.head); c != 0) return c < 0 ? -1 : 1;
    if (a.gen != b.gen) return a.gen ? -1 : 1;
    if (a.super != b.super) return a.super < b.super ? -1 : 1;
    if (a.slots.size() != b.slots.size()) return a.slots.size() < b.slots.size() ? -1 : 1;
    for (std::size_t k = 0; k < a.slots.size(); ++k) {
        const auto& x = a.slots[k];
        const auto& y = b.slots[k];
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (std::size_t l = 0; l < x.size(); ++l)
            if (int c = compare(x[l], y[l]); c != 0) return c;
    }
    return 0;
}

FormalSum FormalSum::of(const Expr& e, Rational c, Parity sign) { return FormalSum(Term{std::move(c), std::move(sign), e}); }

FormalSum& FormalSum::operator+=(const FormalSum& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
    for (const auto& t : o.terms_) terms_.push_back(Term{-t.coeff, t.sign, t.expr});
    return *this;
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
    FormalSum r = *this;
    return r += o;
}

FormalSum FormalSum::operator-(const FormalSum& o) const {
    FormalSum r = *this;
    return r -= o;
}

FormalSum FormalSum::scaled(const Rational& c, const Parity& sign) const {
    FormalSum r;
    for (const auto& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.sign + sign, t.expr});
    return r;
}

namespace {

Expr collapse_identity(const Expr& e) {
    if (e.gen) return e;
    Expr out = e;
    for (auto& s : out.slots)
        for (auto& c : s) c = collapse_identity(c);
    if (out.head == "id" && out.arity() == 1) return *out.flat_args().front();
    return out;
}

}  // namespace

FormalSum FormalSum::normalized() const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term u{t.coeff, t.sign.without_constant(), collapse_identity(t.expr)};
        if (t.sign.constant_part()) u.coeff = -u.coeff;
        ts.push_back(std::move(u));
    }
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        int c = compare(a.expr, b.expr);
        if (c != 0) return c < 0;
        return a.sign < b.sign;
    });
    FormalSum out;
    for (auto& t : ts) {
        if (!out.terms_.empty()) {
            auto& last = out.terms_.back();
            if (compare(last.expr, t.expr) == 0 && last.sign == t.sign) {
                last.coeff += t.coeff;
                if (last.coeff == 0) out.terms_.pop_back();
                continue;
            }
        }
        if (t.coeff != 0) out.terms_.push_back(std::move(t));
    }
    return out;
}

namespace {

std::string render_sum(const FormalSum& s, bool tex) {
    if (s.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : s.terms()) {
        bool neg = sgn(t.coeff) < 0;
        Rational mag = abs(t.coeff);
        if (neg)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        if (mag != 1) {
            if (tex && mag.get_den() != 1)
                out += "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
            else
                out += mag.get_str();
            out += " ";
        }
        if (!t.sign.is_zero()) out += "(-1)^{" + t.sign.str() + "} ";
        out += tex ? t.expr.latex() : t.expr.str();
        first = false;
    }
    return out;
}

}  // namespace

std::string FormalSum::str() const { return render_sum(*this, false); }
std::string FormalSum::latex() const { return render_sum(*this, true); }

nlohmann::json FormalSum::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms_) {
        nlohmann::json j = t.expr.to_json();
        j["coeff"] = to_string(t.coeff);
        if (!t.sign.is_zero()) j["sign"] = t.sign.to_json();
        arr.push_back(j);
    }
    return arr;
}

FormalSum FormalSum::from_json(const nlohmann::json& j) {
    FormalSum s;
    for (const auto& t : j) {
        Rational c = 1;
        if (t.contains("coeff")) {
            const auto& cj = t.at("coeff");
            c = cj.is_string() ? rational_from_string(cj.get<std::string>()) : Rational(cj.get<long>());
        }
        Parity p = t.contains("sign") ? Parity::from_json(t.at("sign")) : Parity{};
        s.push(Term{c, p, Expr::from_json(t)});
    }
    return s;
}

FormalSum normalize(const FormalSum& s) { return s.normalized(); }

bool equal(const FormalSum& a, const FormalSum& b) {
    auto x = a.normalized(), y = b.normalized();
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto& s = x.terms()[k];
        const auto& t = y.terms()[k];
        if (s.coeff != t.coeff || !(s.sign == t.sign) || compare(s.expr, t.expr) != 0) return false;
    }
    return true;
}

bool equal_up_to_sign(const FormalSum& a, const FormalSum& b) {
    auto profile = [](const FormalSum& s) {
        std::map<std::string, std::vector<Rational>> m;
        const auto n = s.normalized();
        for (const auto& t : n.terms()) m[t.expr.to_json().dump()].push_back(abs(t.coeff));
        for (auto& [k, v] : m) std::sort(v.begin(), v.end());
        return m;
    };
    return profile(a) == profile(b);
}

Graded graded_of(const Expr& e) { return Graded{e.d(), e.dbar(), e.self_parity()}; }

Parity swap_exponent(const Graded& u, const Graded& v, SignRule rule) {
    if (rule == SignRule::bigraded) return Parity::constant(u.d * v.d) + u.super * v.super;
    Parity nu = Parity::constant(u.d + u.dbar) + u.super;
    Parity nv = Parity::constant(v.d + v.dbar) + v.super;
    return nu * nv;
}

Parity koszul_exponent(const std::vector<Graded>& before, const std::vector<int>& after, SignRule rule) {
    const std::size_t n = before.size();
    if (after.size() != n) throw std::invalid_argument("koszul: not a permutation (size)");
    std::vector<char> seen(n, 0);
    for (int k : after) {
        if (k < 0 || static_cast<std::size_t>(k) >= n || seen[k]) throw std::invalid_argument("koszul: not a permutation");
        seen[k] = 1;
    }
    Parity e;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            if (after[k] > after[l]) e += swap_exponent(before[after[l]], before[after[k]], rule);
    return e;
}

int koszul_sign(const std::vector<Graded>& before, const std::vector<int>& after, SignRule rule) {
    Parity e = koszul_exponent(before, after, rule);
    if (!e.is_constant()) throw std::invalid_argument("koszul_sign: degrees are symbolic; use koszul_exponent");
    return e.constant_part() ? -1 : 1;
}

Parity tilde_exponent(const Expr& app) {
    Parity e;
    auto args = app.flat_args();
    const std::size_t n = args.size();
    for (std::size_t i = 1; i <= n; ++i)
        if ((n - i) % 2 == 1) e += Parity::constant(1) + args[i - 1]->total_parity();
    return e;
}

namespace {

Parity tilde_all(const Expr& e) {
    if (e.gen) return {};
    Parity p = tilde_exponent(e);
    for (const auto& s : e.slots)
        for (const auto& c : s) p += tilde_all(c);
    return p;
}

}  // namespace

FormalSum apply_tilde(const FormalSum& s) {
    FormalSum out;
    for (const auto& t : s.terms()) out.push(Term{t.coeff, t.sign + tilde_all(t.expr), t.expr});
    return out;
}

}  // namespace partopus
