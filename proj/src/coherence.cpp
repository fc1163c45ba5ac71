#include "partopus/coherence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace partopus {

namespace {

int neg1(int e) { return (e & 1) ? -1 : 1; }

void add_to(Vec& acc, const Vec& v, int sign) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += sign * v[k];
}

// all interleavings of the given strings (each string in order)
void shuffles(const std::vector<std::vector<int>>& strs, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<std::size_t> at(strs.size(), 0);
    std::vector<int> cur;
    std::size_t total = 0;
    for (const auto& s : strs) total += s.size();
    std::function<void()> rec = [&]() {
        if (cur.size() == total) return fn(cur);
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

// sum over pairs moved out of order, (-1)^{||u|| ||v||}
int inversion_sign(const std::vector<int>& order, const std::vector<int>& weight) {
    int e = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j]) e += weight[order[i]] * weight[order[j]];
    return neg1(e);
}

// sum (n - i) ||a_i||, i from 1
int tilde_sign(const std::vector<int>& weights) {
    int e = 0;
    const int n = static_cast<int>(weights.size());
    for (int i = 1; i <= n; ++i) e += (n - i) * weights[i - 1];
    return neg1(e);
}

const Tensor& tensor_of(const Binding& b, const Partition& p) {
    auto it = b.maps.find(structure_symbol(p));
    if (it == b.maps.end()) throw std::invalid_argument("unbound symbol " + structure_symbol(p));
    return it->second.t;
}

std::vector<int> line_base(const Partition& target) {
    std::vector<int> base;
    int acc = 0;
    for (int k : target.slots()) {
        base.push_back(acc);
        acc += k;
    }
    return base;
}

std::vector<Partition> type_ii_maps(const Partition& target) {
    std::vector<Partition> out;
    for (std::size_t a = 0; a + 1 < target.size(); ++a) {
        std::vector<int> s;
        for (std::size_t k = 0; k < target.size(); ++k) {
            if (k == a + 1) continue;
            s.push_back(k == a ? target[k] + target[k + 1] : target[k]);
        }
        out.emplace_back(s);
    }
    return out;
}

// one homogeneous choice: values and degrees of every point
Vec numeric_homogeneous(const Partition& target, const Binding& b, const std::vector<Vec>& val,
                        const std::vector<int>& deg, bool coefficients) {
    const int npts = target.total();
    const auto base = line_base(target);
    Vec out = b.basis.zero();
    // item weights: 0 outer map, 1 inner map, then points
    std::vector<int> weight(2 + npts);
    weight[0] = weight[1] = 1;
    for (int p = 0; p < npts; ++p) weight[2 + p] = (deg[p] + 1) & 1;

    for (const auto& bub : enumerate_bubbles(target)) {
        const Partition inner = bubble_inner(bub), outer = bubble_outer(target, bub);
        const int ne = static_cast<int>(bub.count.size());
        std::vector<int> cores;
        std::vector<std::vector<int>> above, below;
        for (int l = 0; l < ne; ++l) {
            const int line = bub.first_line + l, b0 = base[line];
            std::vector<int> up, down;
            for (int q = 0; q < target[line]; ++q) {
                if (q < bub.start[l])
                    up.push_back(b0 + q);
                else if (q < bub.start[l] + bub.count[l])
                    cores.push_back(b0 + q);
                else
                    down.push_back(b0 + q);
            }
            if (!up.empty()) above.push_back(up);
            if (!down.empty()) below.push_back(down);
        }
        std::vector<Vec> core_vals;
        std::vector<int> core_w;
        int core_deg = 0;
        for (int p : cores) {
            core_vals.push_back(val[p]);
            core_w.push_back(weight[2 + p]);
            core_deg += deg[p];
        }
        const Vec y = tensor_of(b, inner).apply(core_vals);
        const int inner_tilde = tilde_sign(core_w);
        const int y_weight = (structure_degree(inner) + core_deg + 1) & 1;

        shuffles(above, [&](const std::vector<int>& up) {
            shuffles(below, [&](const std::vector<int>& down) {
                std::vector<int> args;  // points, -1 for the bubble
                for (int line = 0; line < bub.first_line; ++line)
                    for (int q = 0; q < target[line]; ++q) args.push_back(base[line] + q);
                args.insert(args.end(), up.begin(), up.end());
                args.push_back(-1);
                args.insert(args.end(), down.begin(), down.end());
                for (int line = bub.first_line + ne; line < static_cast<int>(target.size()); ++line)
                    for (int q = 0; q < target[line]; ++q) args.push_back(base[line] + q);

                std::vector<int> order{0};
                std::vector<Vec> vals;
                std::vector<int> w;
                for (int a : args) {
                    if (a >= 0) {
                        order.push_back(2 + a);
                        vals.push_back(val[a]);
                        w.push_back(weight[2 + a]);
                    } else {
                        order.push_back(1);
                        for (int p : cores) order.push_back(2 + p);
                        vals.push_back(y);
                        w.push_back(y_weight);
                    }
                }
                const int sign = inversion_sign(order, weight) * inner_tilde * tilde_sign(w);
                add_to(out, tensor_of(b, outer).apply(vals), sign);
            });
        });
    }

    const auto merged = type_ii_maps(target);
    for (std::size_t a = 0; a + 1 < target.size(); ++a) {
        const int coeff = coefficients ? target[a] + target[a + 1] : 1;
        std::vector<int> s1, s2;
        for (int q = 0; q < target[a]; ++q) s1.push_back(base[a] + q);
        for (int q = 0; q < target[a + 1]; ++q) s2.push_back(base[a + 1] + q);
        shuffles({s1, s2}, [&](const std::vector<int>& mix) {
            std::vector<int> args;
            for (std::size_t line = 0; line < a; ++line)
                for (int q = 0; q < target[line]; ++q) args.push_back(base[line] + q);
            args.insert(args.end(), mix.begin(), mix.end());
            for (std::size_t line = a + 2; line < target.size(); ++line)
                for (int q = 0; q < target[line]; ++q) args.push_back(base[line] + q);
            std::vector<int> pw(weight.begin() + 2, weight.end());
            std::vector<Vec> vals;
            std::vector<int> w;
            for (int p : args) {
                vals.push_back(val[p]);
                w.push_back(pw[p]);
            }
            const int sign = coeff * inversion_sign(args, pw) * tilde_sign(w);
            add_to(out, tensor_of(b, merged[a]).apply(vals), sign);
        });
    }
    return out;
}

}  // namespace

std::vector<Bubble> enumerate_bubbles(const Partition& target) {
    std::vector<Bubble> out;
    const int t = static_cast<int>(target.size());
    for (int s = 0; s < t; ++s)
        for (int e = s; e < t; ++e) {
            Bubble b{s, std::vector<int>(e - s + 1), std::vector<int>(e - s + 1)};
            std::function<void(int)> rec = [&](int l) {
                if (l > e - s) {
                    out.push_back(b);
                    return;
                }
                const int k = target[s + l];
                for (int st = 0; st < k; ++st)
                    for (int c = 1; st + c <= k; ++c) {
                        b.start[l] = st;
                        b.count[l] = c;
                        rec(l + 1);
                    }
            };
            rec(0);
        }
    return out;
}

Partition bubble_inner(const Bubble& b) { return Partition(b.count); }

Partition bubble_outer(const Partition& target, const Bubble& b) {
    std::vector<int> s;
    const int ne = static_cast<int>(b.count.size());
    int merged = 1;
    for (int l = 0; l < ne; ++l) merged += target[b.first_line + l] - b.count[l];
    for (int line = 0; line < b.first_line; ++line) s.push_back(target[line]);
    s.push_back(merged);
    for (int line = b.first_line + ne; line < static_cast<int>(target.size()); ++line) s.push_back(target[line]);
    return Partition(s);
}

Binding random_binding(const Partition& target, const GradedBasis& basis, Rng& rng) {
    std::set<Partition> types;
    for (const auto& bub : enumerate_bubbles(target)) {
        types.insert(bubble_inner(bub));
        types.insert(bubble_outer(target, bub));
    }
    for (const auto& p : type_ii_maps(target)) types.insert(p);
    Binding b{basis, {}, {}};
    for (const auto& p : types)
        b.maps[structure_symbol(p)] =
            StructureTensor{p, structure_degree(p), random_homogeneous(basis, static_cast<std::size_t>(p.total()), structure_degree(p), rng)};
    for (int k = 0; k < target.total(); ++k) b.gens[generator_name(static_cast<std::size_t>(k))] = random_vec(basis.dim(), rng);
    return b;
}

Vec numeric_identity(const Partition& target, const Binding& b, bool type_ii_coefficients) {
    if (!target.regular()) throw std::invalid_argument("target " + target.str() + " is not regular");
    const int npts = target.total();
    std::vector<std::vector<std::pair<int, Vec>>> comps;
    for (int p = 0; p < npts; ++p) {
        auto it = b.gens.find(generator_name(static_cast<std::size_t>(p)));
        if (it == b.gens.end()) throw std::invalid_argument("unbound generator " + generator_name(static_cast<std::size_t>(p)));
        auto cm = b.basis.components(it->second);
        comps.emplace_back(cm.begin(), cm.end());
    }
    Vec out = b.basis.zero();
    std::vector<Vec> val(npts);
    std::vector<int> deg(npts);
    std::function<void(int)> rec = [&](int p) {
        if (p == npts) {
            add_to(out, numeric_homogeneous(target, b, val, deg, type_ii_coefficients), 1);
            return;
        }
        for (const auto& [d, v] : comps[p]) {
            deg[p] = d;
            val[p] = v;
            rec(p + 1);
        }
    };
    rec(0);
    return out;
}

SuiteReport coherence_suite(const std::vector<Partition>& targets, std::uint64_t seed, int bindings) {
    SuiteReport rep{"coherence", "random bindings over the super-matrix basis", seed, {}};
    Rng rng(seed);
    const GradedBasis basis = super_matrix_dga().basis;
    for (const auto& t : targets) {
        CheckResult c{"symbolic = stepwise numeric at " + t.str(), true, 0, "", nullptr};
        const FormalSum sym = master_identity(t).total();
        for (int s = 0; s < bindings; ++s) {
            Binding b = random_binding(t, basis, rng);
            ++c.samples;
            Vec lhs = realize(sym, b), rhs = numeric_identity(t, b);
            if (lhs != rhs && c.pass) {
                c.pass = false;
                c.witness = {{"binding", s}, {"symbolic", vec_json(lhs, basis)}, {"numeric", vec_json(rhs, basis)}};
            }
        }
        rep.checks.push_back(c);
    }

    // A-infinity components on a dga: m(1) = d, m(2) = product, the rest zero
    const ModelAlgebra dga = super_matrix_dga();
    for (int i = 1; i <= 3; ++i) {
        Partition t{i};
        CheckResult c{"dga: identity " + t.str() + " vanishes", true, 0, "", nullptr};
        const FormalSum sym = master_identity(t).total();
        for (int s = 0; s < bindings; ++s) {
            Binding b = random_binding(t, dga.basis, rng);
            for (auto& [name, st] : b.maps) {
                auto it = dga.maps.find(name);
                st.t = it != dga.maps.end() ? it->second.t : Tensor(dga.basis.dim(), st.t.arity());
            }
            ++c.samples;
            Vec v = realize(sym, b);
            if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; }) && c.pass) {
                c.pass = false;
                c.witness = {{"binding", s}, {"residual", vec_json(v, dga.basis)}};
            }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace partopus
