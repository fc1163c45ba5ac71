#include "partopus/composition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace partopus {

std::string placeholder(std::size_t k) { return "#" + std::to_string(k); }

std::string generator_name(std::size_t k) {
    std::string base(1, static_cast<char>('a' + k % 26));
    return k < 26 ? base : base + std::to_string(k / 26);
}

PMap symbol_map(const std::string& name, const Partition& type, std::optional<int> super) {
    SlotArgs slots;
    std::size_t k = 0;
    for (int s : type.slots()) {
        std::vector<Expr> cs;
        for (int j = 0; j < s; ++j) cs.push_back(Expr::generator(placeholder(k++)));
        slots.push_back(std::move(cs));
    }
    Parity p = super ? Parity::constant(*super) : Parity::var(name);
    return PMap{name, type, p, FormalSum::of(Expr::apply(name, super, std::move(slots)))};
}

PMap element_map(const std::string& name, std::optional<int> super) {
    Parity p = super ? Parity::constant(*super) : Parity::var(name);
    return PMap{name, Partition{0}, p, FormalSum::of(Expr::generator(name, super))};
}

SlotArgs default_args(const Partition& type, std::optional<int> super, std::size_t offset) {
    SlotArgs out;
    std::size_t k = offset;
    for (int s : type.slots()) {
        std::vector<Expr> cs;
        for (int j = 0; j < s; ++j) cs.push_back(Expr::generator(generator_name(k++), super));
        out.push_back(std::move(cs));
    }
    return out;
}

namespace {

void collect_placeholders(const Expr& e, std::vector<std::string>& out) {
    if (e.gen) {
        if (!e.head.empty() && e.head[0] == '#') out.push_back(e.head);
        return;
    }
    for (const auto& s : e.slots)
        for (const auto& c : s) collect_placeholders(c, out);
}

Expr substitute_expr(const Expr& e, const std::map<std::string, const Expr*>& m) {
    if (e.gen) {
        auto it = m.find(e.head);
        return it == m.end() ? e : *it->second;
    }
    Expr out = e;
    for (auto& s : out.slots)
        for (auto& c : s) c = substitute_expr(c, m);
    return out;
}

std::size_t placeholder_index(const std::string& name) { return static_cast<std::size_t>(std::stoul(name.substr(1))); }

}  // namespace

FormalSum instantiate(const FormalSum& body, const std::vector<FormalSum>& args) {
    FormalSum out;
    for (const auto& t : body.terms()) {
        std::vector<std::string> names;
        collect_placeholders(t.expr, names);
        for (const auto& n : names)
            if (placeholder_index(n) >= args.size()) throw std::invalid_argument("instantiate: missing argument " + n);
        std::vector<std::size_t> pick(names.size(), 0);
        std::function<void(std::size_t, Rational, Parity)> rec = [&](std::size_t k, Rational c, Parity sg) {
            if (k == names.size()) {
                std::map<std::string, const Expr*> m;
                std::map<std::string, Parity> sub;
                for (std::size_t q = 0; q < names.size(); ++q) {
                    const auto& a = args[placeholder_index(names[q])].terms()[pick[q]];
                    m[names[q]] = &a.expr;
                    sub[names[q]] = a.expr.total_parity();
                }
                out.push(Term{c, sg + t.sign.substitute(sub), substitute_expr(t.expr, m)});
                return;
            }
            const auto& choices = args[placeholder_index(names[k])].terms();
            for (std::size_t q = 0; q < choices.size(); ++q) {
                pick[k] = q;
                rec(k + 1, c * choices[q].coeff, sg + choices[q].sign);
            }
        };
        rec(0, t.coeff, Parity{});
    }
    return out;
}

FormalSum apply_map(const PMap& m, const std::vector<FormalSum>& flat_args) {
    if (static_cast<int>(flat_args.size()) != m.type.total()) throw std::invalid_argument("apply_map: arity mismatch for " + m.label);
    return instantiate(m.body, flat_args);
}

namespace {

struct Block {
    std::vector<std::vector<CoreRef>> merged;  // cores per merged slot
    std::vector<int> base;
};

Block merge_inners(const std::vector<Partition>& inners) {
    Block b;
    for (std::size_t l = 0; l < inners.size(); ++l) {
        const auto& s = inners[l].slots();
        for (std::size_t q = 0; q < s.size(); ++q) {
            CoreRef c{static_cast<int>(l), static_cast<int>(q), s[q]};
            if (q == 0 && l > 0) {
                b.merged.back().push_back(c);
                b.base.back() += s[q];
            } else {
                b.merged.push_back({c});
                b.base.push_back(s[q]);
            }
        }
    }
    return b;
}

void for_each_target(const Partition& outer, const std::vector<Partition>& inners,
                     const std::function<void(int, const Partition&, const std::vector<int>&)>& fn) {
    const int k = static_cast<int>(inners.size());
    if (k == 0) throw std::invalid_argument("composition needs at least one inner map");
    Block b = merge_inners(inners);
    const auto& is = outer.slots();
    for (std::size_t a = 0; a < is.size(); ++a) {
        if (is[a] < k) continue;
        for_each_composition(is[a] - k, static_cast<int>(b.base.size()), [&](const std::vector<int>& u) {
            std::vector<int> s(is.begin(), is.begin() + a);
            for (std::size_t t = 0; t < u.size(); ++t) s.push_back(b.base[t] + u[t]);
            s.insert(s.end(), is.begin() + a + 1, is.end());
            fn(static_cast<int>(a), Partition(s), u);
        });
    }
}

}  // namespace

PartitionVector composition_targets(const Partition& outer, const std::vector<Partition>& inners) {
    PartitionVector out(Form::raw);
    for_each_target(outer, inners, [&](int, const Partition& t, const std::vector<int>&) { out.add(t); });
    return out;
}

std::vector<Subdivision> enumerate_subdivisions(const Partition& target, const Partition& outer,
                                                const std::vector<Partition>& inners) {
    std::vector<Subdivision> out;
    Block b = merge_inners(inners);
    bool found = false;
    for_each_target(outer, inners, [&](int a, const Partition& t, const std::vector<int>& u) {
        if (!(t == target)) return;
        found = true;
        const std::size_t B = b.base.size();
        std::vector<std::vector<std::vector<int>>> options(B);
        for (std::size_t T = 0; T < B; ++T) options[T] = compositions(u[T], static_cast<int>(b.merged[T].size()) + 1);
        std::vector<std::size_t> pick(B, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t T) {
            if (T == B) {
                Subdivision s{a, a, {}, u};
                for (std::size_t q = 0; q < B; ++q)
                    s.splits.push_back(SlotSplit{a + static_cast<int>(q), options[q][pick[q]], b.merged[q]});
                out.push_back(std::move(s));
                return;
            }
            for (std::size_t q = 0; q < options[T].size(); ++q) {
                pick[T] = q;
                rec(T + 1);
            }
        };
        rec(0);
    });
    if (!found) throw std::invalid_argument("target " + target.str() + " does not arise from this composition");
    return out;
}

std::vector<Subdivision> enumerate_subdivisions(const Partition& target, const Partition& outer, const Partition& inner) {
    return enumerate_subdivisions(target, outer, std::vector<Partition>{inner});
}

std::vector<Subdivision> enumerate_subdivisions(const Partition& target, int i, const Partition& inner) {
    return enumerate_subdivisions(target, Partition{i}, inner);
}

std::size_t shuffle_count(const std::vector<int>& lengths) {
    // multinomial coefficient
    mpz_class num = 1;
    int total = 0;
    for (int l : lengths) {
        for (int j = 1; j <= l; ++j) {
            ++total;
            num *= total;
            num /= j;
        }
    }
    return num.get_ui();
}

namespace {

// strings grouped by gap index
std::vector<std::vector<std::vector<int>>> gap_strings(const Subdivision& s, int inner_count,
                                                       const std::vector<int>& slot_base,
                                                       std::vector<std::vector<std::vector<int>>>* cores) {
    std::vector<std::vector<std::vector<int>>> gaps(inner_count + 1);
    for (const auto& sp : s.splits) {
        int pos = slot_base[sp.slot];
        for (std::size_t g = 0; g < sp.segments.size(); ++g) {
            std::vector<int> str;
            for (int j = 0; j < sp.segments[g]; ++j) str.push_back(pos++);
            int gi = g == 0 ? sp.cores[0].inner : sp.cores[g - 1].inner + 1;
            if (!str.empty()) gaps[gi].push_back(std::move(str));
            if (g < sp.cores.size()) {
                const auto& c = sp.cores[g];
                std::vector<int> core;
                for (int j = 0; j < c.size; ++j) core.push_back(pos++);
                if (cores) (*cores)[c.inner][c.inner_slot] = std::move(core);
            }
        }
    }
    return gaps;
}

void for_each_shuffle(const std::vector<std::vector<int>>& strs, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<std::size_t> at(strs.size(), 0);
    std::vector<int> cur;
    std::size_t total = 0;
    for (const auto& s : strs) total += s.size();
    std::function<void()> rec = [&]() {
        if (cur.size() == total) {
            fn(cur);
            return;
        }
        for (std::size_t k = 0; k < strs.size(); ++k) {
            if (at[k] == strs[k].size()) continue;
            cur.push_back(strs[k][at[k]++]);
            rec();
            --at[k];
            cur.pop_back();
        }
    };
    rec();
}

}  // namespace

std::size_t expanded_term_count(const Subdivision& s, int inner_count) {
    std::vector<int> base(s.first_target_slot + s.splits.size() + 1, 0);
    auto gaps = gap_strings(s, inner_count, base, nullptr);
    std::size_t n = 1;
    for (const auto& g : gaps) {
        std::vector<int> lens;
        for (const auto& str : g) lens.push_back(static_cast<int>(str.size()));
        n *= shuffle_count(lens);
    }
    return n;
}

FormalSum compose_component(const PMap& x, const std::vector<PMap>& ys, const Partition& target, const SlotArgs& args,
                            const CompositionOptions& opt) {
    if (args.size() != target.size()) throw std::invalid_argument("argument slots do not match " + target.str());
    for (std::size_t t = 0; t < args.size(); ++t)
        if (static_cast<int>(args[t].size()) != target[t]) throw std::invalid_argument("argument count does not match " + target.str());

    const int k = static_cast<int>(ys.size());
    std::vector<Partition> inner_types;
    for (const auto& y : ys) inner_types.push_back(y.type);
    auto subs = enumerate_subdivisions(target, x.type, inner_types);

    std::vector<int> slot_base;
    std::vector<const Expr*> flat;
    for (const auto& s : args) {
        slot_base.push_back(static_cast<int>(flat.size()));
        for (const auto& e : s) flat.push_back(&e);
    }
    std::vector<Graded> items{x.graded()};
    for (const auto& y : ys) items.push_back(y.graded());
    for (const auto* e : flat) items.push_back(Graded{-1, 0, e->total_parity()});
    auto arg_item = [&](int a) { return 1 + k + a; };

    FormalSum out;
    for (const auto& s : subs) {
        std::vector<std::vector<std::vector<int>>> cores(k);
        for (int l = 0; l < k; ++l) cores[l].resize(ys[l].type.size());
        auto gaps = gap_strings(s, k, slot_base, &cores);
        const int alpha = s.outer_slot;
        const int block = static_cast<int>(s.splits.size());

        std::vector<FormalSum> inner_vals(k);
        for (int l = 0; l < k; ++l) {
            std::vector<FormalSum> ia;
            for (const auto& core : cores[l])
                for (int a : core) ia.push_back(FormalSum::of(*flat[a]));
            inner_vals[l] = apply_map(ys[l], ia);
        }

        std::vector<std::vector<int>> gap_pick(k + 1);
        std::function<void(int)> rec = [&](int g) {
            if (g <= k) {
                for_each_shuffle(gaps[g], [&](const std::vector<int>& sh) {
                    gap_pick[g] = sh;
                    rec(g + 1);
                });
                return;
            }
            // x's flat argument list; -1-l marks inner map l
            std::vector<int> xs;
            for (int q = 0; q < alpha; ++q)
                for (int j = 0; j < target[q]; ++j) xs.push_back(slot_base[q] + j);
            for (int l = 0; l <= k; ++l) {
                xs.insert(xs.end(), gap_pick[l].begin(), gap_pick[l].end());
                if (l < k) xs.push_back(-1 - l);
            }
            for (int q = alpha + block; q < static_cast<int>(target.size()); ++q)
                for (int j = 0; j < target[q]; ++j) xs.push_back(slot_base[q] + j);

            std::vector<int> lin{0};
            std::vector<FormalSum> xargs;
            for (int v : xs) {
                if (v >= 0) {
                    lin.push_back(arg_item(v));
                    xargs.push_back(FormalSum::of(*flat[v]));
                } else {
                    int l = -1 - v;
                    lin.push_back(1 + l);
                    for (const auto& core : cores[l])
                        for (int a : core) lin.push_back(arg_item(a));
                    xargs.push_back(inner_vals[l]);
                }
            }
            Parity sg = koszul_exponent(items, lin, opt.rule);
            out += apply_map(x, xargs).scaled(1, sg);
        };
        rec(0);
    }
    if (opt.tilde) out = apply_tilde(out);
    return out.normalized();
}

FormalSum compose_component(const PMap& x, const std::vector<PMap>& ys, const Partition& target, const CompositionOptions& opt) {
    return compose_component(x, ys, target, default_args(target), opt);
}

PMap compose_map(const PMap& x, const std::vector<PMap>& ys, const Partition& target, const CompositionOptions& opt) {
    SlotArgs ph;
    std::size_t n = 0;
    for (int s : target.slots()) {
        std::vector<Expr> cs;
        for (int j = 0; j < s; ++j) cs.push_back(Expr::generator(placeholder(n++)));
        ph.push_back(std::move(cs));
    }
    CompositionOptions o = opt;
    o.tilde = false;
    std::string label = "{" + x.label + "}{";
    Parity sup = x.super;
    for (std::size_t l = 0; l < ys.size(); ++l) {
        label += (l ? "," : "") + ys[l].label;
        sup += ys[l].super;
    }
    label += "}" + target.str();
    return PMap{label, target, sup, compose_component(x, ys, target, ph, o)};
}

std::map<Partition, FormalSum> compose_multi(const PMap& x, const std::vector<PMap>& ys, const CompositionOptions& opt) {
    std::vector<Partition> types;
    for (const auto& y : ys) types.push_back(y.type);
    std::map<Partition, FormalSum> out;
    for (const auto& t : composition_targets(x.type, types).support()) out[t] = compose_component(x, ys, t, opt);
    return out;
}

std::map<Partition, FormalSum> compose_pair(const PMap& x, const PMap& y, const CompositionOptions& opt) {
    return compose_multi(x, {y}, opt);
}

std::map<Partition, PMap> compose_pair_maps(const PMap& x, const PMap& y, const CompositionOptions& opt) {
    std::map<Partition, PMap> out;
    for (const auto& t : composition_targets(x.type, {y.type}).support()) out.emplace(t, compose_map(x, {y}, t, opt));
    return out;
}

namespace {

struct ChainItem {
    ChainSymbol sym;
    int group;
};

Expr chain_expr(int v, const std::vector<ChainItem>& items, const std::vector<std::vector<int>>& kids) {
    const auto& s = items[v].sym;
    if (s.arity == 0) return Expr::generator(s.name, s.super);
    std::vector<Expr> cs;
    for (int c : kids[v]) cs.push_back(chain_expr(c, items, kids));
    return Expr::apply(s.name, s.super, {cs});
}

void chain_preorder(int v, const std::vector<std::vector<int>>& kids, std::vector<int>& seq) {
    seq.push_back(v);
    for (int c : kids[v]) chain_preorder(c, kids, seq);
}

}  // namespace

FormalSum expand_chain(const ChainSymbol& head, const std::vector<std::vector<ChainSymbol>>& groups,
                       const CompositionOptions& opt) {
    std::vector<ChainItem> items{{head, -1}};
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (const auto& s : groups[g]) items.push_back({s, static_cast<int>(g)});
    const int n = static_cast<int>(items.size());
    if (n > 12) throw std::invalid_argument("expand_chain: too many symbols");
    FormalSum out;
    if (head.arity == 0) return out;  // nothing can be substituted into an element

    std::vector<Graded> graded;
    for (const auto& it : items) {
        Parity p = it.sym.super ? Parity::constant(*it.sym.super) : Parity::var(it.sym.name);
        graded.push_back(Graded{it.sym.arity - 1, 0, p});
    }

    std::vector<int> parent(n, -1), load(n, 0);
    std::vector<std::vector<int>> kids(n);
    std::function<void(int)> order_node = [&](int v) {
        if (v == n) {
            std::vector<int> seq;
            chain_preorder(0, kids, seq);
            std::vector<int> last(groups.size(), -1);
            for (int x : seq) {
                int g = items[x].group;
                if (g < 0) continue;
                if (x < last[g]) return;
                last[g] = x;
            }
            Parity sg = koszul_exponent(graded, seq, opt.rule);
            out.push(Term{1, sg, chain_expr(0, items, kids)});
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
            for (int v = 0; v < n; ++v)
                if (load[v] != items[v].sym.arity) return;
            for (auto& kv : kids) kv.clear();
            for (int y = 1; y < n; ++y) kids[parent[y]].push_back(y);
            order_node(0);
            return;
        }
        for (int p = 0; p < x; ++p) {
            if (items[p].group >= items[x].group || load[p] >= items[p].sym.arity) continue;
            parent[x] = p;
            ++load[p];
            assign(x + 1);
            --load[p];
        }
    };
    assign(1);
    if (opt.tilde) out = apply_tilde(out);
    return out.normalized();
}

}  // namespace partopus
