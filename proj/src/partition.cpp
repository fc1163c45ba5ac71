#include "partopus/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "partopus/errors.hpp"

namespace partopus {

Partition::Partition(std::vector<int> slots) : slots_(std::move(slots)) {
    if (slots_.empty()) throw std::invalid_argument("partition needs at least one slot");
    for (int s : slots_)
        if (s < 0) throw std::invalid_argument("negative slot in partition");
}

int Partition::total() const { return std::accumulate(slots_.begin(), slots_.end(), 0); }

bool Partition::regular() const {
    return std::all_of(slots_.begin(), slots_.end(), [](int s) { return s >= 1; });
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < slots_.size(); ++k) {
        if (k) out += '|';
        out += std::to_string(slots_[k]);
    }
    return out + ")";
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = d() <=> o.d(); c != 0) return c;
    if (auto c = dbar() <=> o.dbar(); c != 0) return c;
    return std::lexicographical_compare_three_way(slots_.begin(), slots_.end(), o.slots_.begin(), o.slots_.end());
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    std::int64_t number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer", pos);
        return std::stoll(std::string(s.substr(start, pos - start)));
    }
};

Partition parse_partition(Cursor& c) {
    c.expect('(');
    std::vector<int> slots;
    slots.push_back(static_cast<int>(c.number()));
    while (c.eat('|')) slots.push_back(static_cast<int>(c.number()));
    c.expect(')');
    return Partition(std::move(slots));
}

}  // namespace

Partition Partition::parse(std::string_view text) {
    Cursor c{text};
    Partition p = parse_partition(c);
    if (!c.at_end()) throw ParseError("trailing input after partition", c.pos);
    return p;
}

PartitionVector::PartitionVector(std::initializer_list<Partition> ps) {
    for (const auto& p : ps) add(p, 1);
}

void PartitionVector::add(const Partition& p, std::int64_t c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::int64_t PartitionVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<Partition> PartitionVector::support() const {
    std::vector<Partition> out;
    for (const auto& [p, c] : terms_) out.push_back(p);
    return out;
}

PartitionVector PartitionVector::reduced() const {
    PartitionVector out(Form::reduced);
    for (const auto& [p, c] : terms_) out.add(p, c > 0 ? 1 : -1);
    return out;
}

PartitionVector& PartitionVector::operator+=(const PartitionVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

PartitionVector& PartitionVector::operator-=(const PartitionVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

PartitionVector PartitionVector::operator+(const PartitionVector& o) const {
    PartitionVector r = *this;
    return r += o;
}

PartitionVector PartitionVector::operator-(const PartitionVector& o) const {
    PartitionVector r = *this;
    return r -= o;
}

PartitionVector PartitionVector::operator*(std::int64_t k) const {
    PartitionVector r(form_);
    for (const auto& [p, c] : terms_) r.add(p, c * k);
    return r;
}

std::string PartitionVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        if (mag != 1) out += std::to_string(mag);
        out += p.str();
        first = false;
    }
    return out;
}

PartitionVector PartitionVector::parse(std::string_view text) {
    Cursor c{text};
    PartitionVector v(Form::raw);
    if (c.at_end()) throw ParseError("empty partition vector", 0);
    c.skip();
    if (c.pos < text.size() && text[c.pos] == '0') {
        ++c.pos;
        if (!c.at_end()) throw ParseError("trailing input after 0", c.pos);
        return v;
    }
    bool first = true;
    while (!c.at_end()) {
        std::int64_t sign = 1;
        if (c.eat('-'))
            sign = -1;
        else if (!c.eat('+') && !first)
            throw ParseError("expected '+' or '-'", c.pos);
        c.skip();
        std::int64_t mag = 1;
        if (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos]))) mag = c.number();
        v.add(parse_partition(c), sign * mag);
        first = false;
    }
    return v;
}

nlohmann::json PartitionVector::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : terms_) terms.push_back({{"coeff", c}, {"slots", p.slots()}});
    return {{"terms", terms}};
}

PartitionVector PartitionVector::from_json(const nlohmann::json& j) {
    PartitionVector v(Form::raw);
    for (const auto& t : j.at("terms")) v.add(Partition(t.at("slots").get<std::vector<int>>()), t.at("coeff").get<std::int64_t>());
    return v;
}

nlohmann::json to_json(const Partition& p) { return p.slots(); }
Partition partition_from_json(const nlohmann::json& j) { return Partition(j.get<std::vector<int>>()); }

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
    if (total < 0 || parts < 0) return;
    if (parts == 0) {
        if (total == 0) fn({});
        return;
    }
    std::vector<int> cur(parts, 0);
    // odometer over the first parts-1 entries; last takes the rest
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == parts - 1) {
            cur[k] = left;
            fn(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[k] = v;
            rec(k + 1, left - v);
        }
    };
    rec(0, total);
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for_each_composition(total, parts, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

std::vector<Partition> partitions_with(int d, int dbar, bool allow_zero) {
    std::vector<Partition> out;
    int total = d + 1, r = dbar + 1;
    if (total < 0 || r < 1) return out;
    if (allow_zero) {
        for_each_composition(total, r, [&](const std::vector<int>& c) { out.emplace_back(c); });
    } else if (total >= r) {
        for_each_composition(total - r, r, [&](const std::vector<int>& c) {
            std::vector<int> s = c;
            for (int& x : s) ++x;
            out.emplace_back(s);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> regular_partitions_up_to(int max_d) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_d; ++d)
        for (int db = 0; db <= d; ++db) {
            auto ps = partitions_with(d, db, false);
            out.insert(out.end(), ps.begin(), ps.end());
        }
    return out;
}

PartitionVector star_simple(int i, const Partition& q) {
    PartitionVector out(Form::reduced);
    if (i < 1) return out;
    const auto& js = q.slots();
    for_each_composition(i - 1, static_cast<int>(js.size()), [&](const std::vector<int>& u) {
        std::vector<int> s(js.size());
        for (std::size_t l = 0; l < js.size(); ++l) s[l] = js[l] + u[l];
        out.add(Partition(s), 1);
    });
    return out;
}

PartitionVector star_raw(const Partition& p, const Partition& q) {
    PartitionVector out(Form::raw);
    const auto& is = p.slots();
    for (std::size_t l = 0; l < is.size(); ++l) {
        const auto v = star_simple(is[l], q);
        for (const auto& [tau, c] : v.terms()) {
            std::vector<int> s(is.begin(), is.begin() + l);
            s.insert(s.end(), tau.slots().begin(), tau.slots().end());
            s.insert(s.end(), is.begin() + l + 1, is.end());
            out.add(Partition(s), c);
        }
    }
    return out;
}

PartitionVector star(const Partition& p, const Partition& q) { return star_raw(p, q).reduced(); }

PartitionVector star(const PartitionVector& p, const PartitionVector& q) {
    PartitionVector acc(Form::raw);
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) acc += star(a, b) * (ca * cb);
    return acc.reduced();
}

namespace {

// N(1|k){(i)|t1..tk}: overlap-concatenate, then spread i-k over the slots
PartitionVector n_singleton(int i, const std::vector<Partition>& ts) {
    PartitionVector out(Form::reduced);
    int k = static_cast<int>(ts.size());
    if (k == 0) {
        out.add(Partition{i});
        return out;
    }
    if (i < k) return out;
    std::vector<int> base;
    for (int l = 0; l < k; ++l) {
        const auto& s = ts[l].slots();
        if (l == 0)
            base = s;
        else {
            base.back() += s.front();
            base.insert(base.end(), s.begin() + 1, s.end());
        }
    }
    for_each_composition(i - k, static_cast<int>(base.size()), [&](const std::vector<int>& u) {
        std::vector<int> s(base.size());
        for (std::size_t l = 0; l < base.size(); ++l) s[l] = base[l] + u[l];
        out.add(Partition(s));
    });
    return out;
}

// general head: sum over the head's slots, everything into that slot
PartitionVector n_node(const Partition& head, const std::vector<Partition>& ts) {
    PartitionVector out(Form::raw);
    const auto& is = head.slots();
    if (ts.empty()) {
        out.add(head);
        return out;
    }
    for (std::size_t a = 0; a < is.size(); ++a) {
        const auto v = n_singleton(is[a], ts);
        for (const auto& [tau, c] : v.terms()) {
            std::vector<int> s(is.begin(), is.begin() + a);
            s.insert(s.end(), tau.slots().begin(), tau.slots().end());
            s.insert(s.end(), is.begin() + a + 1, is.end());
            out.add(Partition(s));
        }
    }
    return out.reduced();
}

struct Item {
    Partition type;
    int group;  // -1 for the head
};

// type vector of node v given children lists
PartitionVector node_types(int v, const std::vector<Item>& items, const std::vector<std::vector<int>>& kids) {
    std::vector<PartitionVector> child_types;
    for (int c : kids[v]) child_types.push_back(node_types(c, items, kids));
    PartitionVector out(Form::raw);
    std::vector<Partition> pick(child_types.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == child_types.size()) {
            out += n_node(items[v].type, pick);
            return;
        }
        for (const auto& [p, c] : child_types[k].terms()) {
            pick[k] = p;
            rec(k + 1);
        }
    };
    rec(0);
    return out.reduced();
}

void preorder(int v, const std::vector<std::vector<int>>& kids, std::vector<int>& seq) {
    seq.push_back(v);
    for (int c : kids[v]) preorder(c, kids, seq);
}

}  // namespace

PartitionVector higher_product(const Partition& shape, const Partition& head,
                               const std::vector<std::vector<Partition>>& groups) {
    if (shape.size() < 2 || shape[0] != 1) throw std::invalid_argument("higher product shape must be (1|...)");
    if (!shape.regular()) throw std::invalid_argument("higher product shape must be regular");
    if (groups.size() + 1 != shape.size()) throw std::invalid_argument("group count does not match shape");
    if (!head.regular()) throw std::invalid_argument("higher product arguments must be regular");
    std::vector<Item> items{{head, -1}};
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (static_cast<int>(groups[g].size()) != shape[g + 1]) throw std::invalid_argument("group size does not match shape");
        for (const auto& p : groups[g]) {
            if (!p.regular()) throw std::invalid_argument("higher product arguments must be regular");
            items.push_back({p, static_cast<int>(g)});
        }
    }
    const int n = static_cast<int>(items.size());
    PartitionVector out(Form::raw);
    std::vector<int> parent(n, -1);
    std::vector<std::vector<int>> kids(n);

    // children orders are all permutations of each child set; the preorder check
    // keeps only those preserving the order inside every group
    std::function<void(int)> order_node = [&](int v) {
        if (v == n) {
            std::vector<int> seq;
            preorder(0, kids, seq);
            std::vector<int> last(groups.size(), -1);
            for (int x : seq) {
                int g = items[x].group;
                if (g < 0) continue;
                if (x < last[g]) return;
                last[g] = x;
            }
            out += node_types(0, items, kids);
            return;
        }
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end());
        do {
            order_node(v + 1);
        } while (std::next_permutation(ks.begin(), ks.end()));
    };
    std::function<void(int)> assign = [&](int x) {
        if (x == n) {
            for (auto& k : kids) k.clear();
            for (int y = 1; y < n; ++y) kids[parent[y]].push_back(y);
            order_node(0);
            return;
        }
        for (int p = 0; p < x; ++p) {
            if (items[p].group >= items[x].group) continue;
            parent[x] = p;
            assign(x + 1);
        }
    };
    assign(1);
    return out.reduced();
}

PartitionVector pre_lie_defect(const PartitionVector& p1, const PartitionVector& p2, const PartitionVector& p3) {
    return star(star(p1, p2), p3) - star(p1, star(p2, p3));
}

PartitionVector pre_lie_defect(const Partition& p1, const Partition& p2, const Partition& p3) {
    return pre_lie_defect(PartitionVector{p1}, PartitionVector{p2}, PartitionVector{p3});
}

PartitionVector bracket(const PartitionVector& p, const PartitionVector& q) { return star(p, q) - star(q, p); }

PartitionVector bracket(const Partition& p, const Partition& q) { return bracket(PartitionVector{p}, PartitionVector{q}); }

}  // namespace partopus
