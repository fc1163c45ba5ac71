#include "partopus/master_identity.hpp"

#include <sstream>
#include <stdexcept>

namespace partopus {

namespace {

const Partition kLeft{1, 0};
const Partition kRight{0, 1};

bool all_equal(const Partition& p, int v) {
    for (int s : p.slots())
        if (s != v) return false;
    return true;
}

bool in_filter(const Partition& p, SymbolFilter f) {
    switch (f) {
        case SymbolFilter::none: return true;
        case SymbolFilter::a_infinity: return p.size() == 1 && p.regular();
        case SymbolFilter::ones: return p.regular() && all_equal(p, 1);
    }
    return false;
}

std::string filter_name(SymbolFilter f) {
    switch (f) {
        case SymbolFilter::none: return "none";
        case SymbolFilter::a_infinity: return "a-infinity";
        case SymbolFilter::ones: return "ones";
    }
    return "none";
}

// "{a|b,c}"
std::string slot_text(const SlotArgs& args) {
    std::string s = "{";
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (k) s += "|";
        for (std::size_t l = 0; l < args[k].size(); ++l) s += (l ? "," : "") + args[k][l].head;
    }
    return s + "}";
}

std::string row_header(const IdentityRow& r, const Partition& target) {
    return "{" + structure_symbol(r.f.outer) + "}{" + structure_symbol(r.f.inner) + "}" + slot_text(default_args(target));
}

std::string type_ii_header(const Partition& target, std::size_t alpha, std::int64_t coeff) {
    SlotArgs args = default_args(target);
    std::vector<int> merged;
    std::string inside;
    for (std::size_t k = 0; k < target.size(); ++k) {
        if (k == alpha + 1) continue;
        merged.push_back(k == alpha ? target[k] + target[k + 1] : target[k]);
    }
    std::string s = (coeff != 1 ? std::to_string(coeff) : std::string()) + "{" + structure_symbol(Partition(merged)) + "}{";
    for (std::size_t k = 0; k < target.size(); ++k) {
        if (k == alpha + 1) continue;
        if (k) s += "|";
        if (k == alpha) {
            SlotArgs two{args[k]};
            SlotArgs three{args[k + 1]};
            s += slot_text(two) + slot_text(three);
        } else {
            s += slot_text(SlotArgs{args[k]}).substr(1, std::string::npos);
            s.pop_back();
        }
    }
    return s + "}";
}

std::string tex_braces(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '{')
            o += "\\{";
        else if (c == '}')
            o += "\\}";
        else if (c == '|')
            o += "\\mid ";
        else
            o += c;
    }
    return o;
}

}  // namespace

bool Factorization::type_ii() const { return inner == kLeft || inner == kRight; }

std::string structure_symbol(const Partition& p) { return "m" + p.str(); }

int structure_degree(const Partition& p) { return 1 - p.d() - p.dbar(); }

PMap structure_map(const Partition& p) {
    PMap m = symbol_map(structure_symbol(p), p, structure_degree(p));
    return m;
}

std::vector<Factorization> factorizations(const Partition& target, SymbolFilter filter) {
    if (!target.regular()) throw std::invalid_argument("target " + target.str() + " is not regular");
    std::vector<Factorization> out;
    const int d = target.d(), db = target.dbar();
    for (int d1 = -1; d1 <= d + 1; ++d1) {
        for (int b1 = 0; b1 <= db; ++b1) {
            const int d2 = d - d1, b2 = db - b1;
            auto candidates = [&](int dd, int bb, bool inner) {
                std::vector<Partition> c;
                if (dd >= 0)
                    for (const auto& p : partitions_with(dd, bb, false))
                        if (in_filter(p, filter)) c.push_back(p);
                if (inner && filter == SymbolFilter::none && dd == 0 && bb == 1) {
                    c.push_back(kLeft);
                    c.push_back(kRight);
                }
                return c;
            };
            for (const auto& p : candidates(d1, b1, false))
                for (const auto& q : candidates(d2, b2, true)) {
                    auto mult = star_raw(p, q).coeff(target);
                    if (mult > 0) out.push_back(Factorization{p, q, mult});
                }
        }
    }
    std::sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
        if (a.type_ii() != b.type_ii()) return !a.type_ii();
        if (a.outer != b.outer) return a.outer < b.outer;
        return a.inner < b.inner;
    });
    return out;
}

std::vector<IdentityRow> type_i_rows(const Partition& target, SymbolFilter filter) {
    CompositionOptions opt{SignRule::total, true};
    std::vector<IdentityRow> rows;
    SlotArgs args = default_args(target);
    for (const auto& f : factorizations(target, filter)) {
        if (f.type_ii()) continue;
        IdentityRow r{f, enumerate_subdivisions(target, f.outer, f.inner).size(), {}};
        r.terms = compose_component(structure_map(f.outer), {structure_map(f.inner)}, target, args, opt);
        rows.push_back(std::move(r));
    }
    return rows;
}

FormalSum type_i_terms(const Partition& target, SymbolFilter filter) {
    FormalSum s;
    for (const auto& r : type_i_rows(target, filter)) s += r.terms;
    return s.normalized();
}

FormalSum type_ii_terms(const Partition& target, bool include_coefficients) {
    if (!target.regular()) throw std::invalid_argument("target " + target.str() + " is not regular");
    FormalSum out;
    SlotArgs args = default_args(target);
    std::vector<Graded> items;
    for (const auto& s : args)
        for (const auto& e : s) items.push_back(Graded{-1, 0, e.self_parity()});
    for (std::size_t a = 0; a + 1 < target.size(); ++a) {
        std::vector<int> merged;
        for (std::size_t k = 0; k < target.size(); ++k) {
            if (k == a + 1) continue;
            merged.push_back(k == a ? target[k] + target[k + 1] : target[k]);
        }
        Partition mp(merged);
        const Rational coeff = include_coefficients ? target[a] + target[a + 1] : 1;
        int base = 0;
        for (std::size_t k = 0; k < a; ++k) base += target[k];
        const int la = target[a], lb = target[a + 1];
        // choose which merged positions carry the first string
        std::vector<int> mask(la + lb, 0);
        std::fill(mask.begin() + lb, mask.end(), 1);
        do {
            std::vector<int> order;
            std::vector<std::vector<Expr>> slots;
            int flat = 0;
            for (std::size_t k = 0; k < target.size(); ++k) {
                if (k == a + 1) {
                    flat += lb;
                    continue;
                }
                std::vector<Expr> cs;
                if (k == a) {
                    int ia = 0, ib = 0;
                    for (int m : mask) {
                        int idx = m ? base + ia++ : base + la + ib++;
                        order.push_back(idx);
                        cs.push_back(args[m ? a : a + 1][m ? ia - 1 : ib - 1]);
                    }
                    flat += la;
                } else {
                    for (const auto& e : args[k]) {
                        order.push_back(flat++);
                        cs.push_back(e);
                    }
                }
                slots.push_back(std::move(cs));
            }
            Parity sg = koszul_exponent(items, order, SignRule::total);
            out.push(Term{coeff, sg, Expr::apply(structure_symbol(mp), structure_degree(mp), std::move(slots))});
        } while (std::next_permutation(mask.begin(), mask.end()));
    }
    return apply_tilde(out).normalized();
}

IdentityReport master_identity(const Partition& target, const IdentityOptions& opt) {
    IdentityReport r;
    r.target = target;
    r.options = opt;
    r.rows = type_i_rows(target, opt.filter);
    for (const auto& row : r.rows) r.type_i += row.terms;
    r.type_i = r.type_i.normalized();
    // Type II needs m(1|0), m(0|1), which no filter keeps
    if (opt.filter == SymbolFilter::none) r.type_ii = type_ii_terms(target, opt.type_ii_coefficients);
    return r;
}

std::string IdentityReport::str() const {
    std::ostringstream os;
    os << "identity " << target.str() << "\n";
    for (const auto& row : rows)
        os << "  " << row_header(row, target) << "  [" << row.subdivisions << " subdivisions]\n    " << row.terms.str()
           << "\n";
    if (options.filter == SymbolFilter::none && target.size() > 1) {
        os << "  type II:";
        for (std::size_t a = 0; a + 1 < target.size(); ++a)
            os << " " << type_ii_header(target, a, options.type_ii_coefficients ? target[a] + target[a + 1] : 1);
        os << "\n    " << type_ii.str() << "\n";
    }
    os << "  = 0\n";
    return os.str();
}

std::string IdentityReport::latex() const {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    bool first = true;
    for (const auto& row : rows) {
        os << (first ? "&" : "&+") << tex_braces(row_header(row, target)) << " \\\\\n";
        os << "&\\quad = " << row.terms.latex() << " \\\\\n";
        first = false;
    }
    if (!type_ii.empty()) {
        os << "&+";
        for (std::size_t a = 0; a + 1 < target.size(); ++a)
            os << (a ? " + " : "") << tex_braces(type_ii_header(target, a, options.type_ii_coefficients ? target[a] + target[a + 1] : 1));
        os << " \\\\\n&\\quad = " << type_ii.latex() << " \\\\\n";
    }
    os << "&= 0\n\\end{align*}\n";
    return os.str();
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& row : rows)
        rs.push_back({{"outer", partopus::to_json(row.f.outer)},
                      {"inner", partopus::to_json(row.f.inner)},
                      {"multiplicity", row.f.multiplicity},
                      {"subdivisions", row.subdivisions},
                      {"terms", row.terms.to_json()}});
    return {{"target", partopus::to_json(target)},
            {"type_i", type_i.to_json()},
            {"type_ii", type_ii.to_json()},
            {"options",
             {{"include_type_ii_coefficients", options.type_ii_coefficients}, {"filter", filter_name(options.filter)}}},
            {"rows", rs}};
}

}  // namespace partopus
