#include "partopus/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

namespace partopus {

namespace {

int neg1(int e) { return (e & 1) ? -1 : 1; }

// output arity past which the suite does not go; keeps dense tensors small
constexpr std::size_t kMaxArity = 7;

nlohmann::json arities(const std::vector<const Tensor*>& ts) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto* t : ts) j.push_back(t->arity());
    return j;
}

}  // namespace

Tensor brace(const Tensor& x, const std::vector<Tensor>& ys) {
    const std::size_t n = x.arity(), k = ys.size(), dim = x.dim();
    // d(x{Y}) = d(x) + sum d(y), also when x has too few inputs and the result is zero
    long tot = static_cast<long>(n) - static_cast<long>(k);
    for (const auto& y : ys) tot += static_cast<long>(y.arity());
    Tensor out(dim, static_cast<std::size_t>(std::max(tot, 0L)));
    if (k > n) return out;
    std::vector<std::size_t> pos(k);
    for (std::size_t l = 0; l < k; ++l) pos[l] = l;
    // walk all increasing position tuples
    while (true) {
        int sign = 1;
        std::size_t before_extra = 0;
        for (std::size_t l = 0; l < k; ++l) {
            std::size_t before = pos[l] - l + before_extra;
            sign *= neg1(hoch_degree(ys[l]) * static_cast<int>(before));
            before_extra += ys[l].arity();
        }
        for (std::size_t r = 0; r < out.rows(); ++r) {
            auto in = out.inputs_of(r);
            std::vector<Vec> vecs;
            std::size_t c = 0, l = 0;
            for (std::size_t slot = 0; slot < n; ++slot) {
                if (l < k && pos[l] == slot) {
                    const auto& y = ys[l];
                    std::vector<std::size_t> yin(in.begin() + c, in.begin() + c + y.arity());
                    vecs.push_back(y.apply_basis(y.row_of(yin)));
                    c += y.arity();
                    ++l;
                } else {
                    Vec v(dim, 0);
                    v[in[c++]] = 1;
                    vecs.push_back(std::move(v));
                }
            }
            Vec val = x.apply(vecs);
            for (std::size_t o = 0; o < dim; ++o)
                if (val[o] != 0) out.at(r, o) += sign * val[o];
        }
        // next combination
        std::size_t l = k;
        while (l > 0 && pos[l - 1] == n - k + l - 1) --l;
        if (l == 0) break;
        ++pos[l - 1];
        for (std::size_t q = l; q < k; ++q) pos[q] = pos[q - 1] + 1;
    }
    return out;
}

Tensor gerstenhaber(const Tensor& x, const Tensor& y) {
    return brace(x, {y}) - brace(y, {x}) * neg1(hoch_degree(x) * hoch_degree(y));
}

Tensor hoch_delta(const Tensor& m, const Tensor& x) { return gerstenhaber(m, x); }

Tensor hoch_m2(const Tensor& m, const Tensor& x, const Tensor& y) { return brace(m, {x, y}); }

Tensor identity_i(const Tensor& m, const Tensor& x) { return hoch_delta(m, hoch_delta(m, x)); }

Tensor identity_ii(const Tensor& m, const Tensor& x, const Tensor& y) {
    return hoch_delta(m, hoch_m2(m, x, y)) + hoch_m2(m, hoch_delta(m, x), y) +
           hoch_m2(m, x, hoch_delta(m, y)) * neg1(hoch_degree(x));
}

Tensor identity_iii(const Tensor& m, const Tensor& x, const std::vector<Tensor>& ys) {
    const std::size_t n = ys.size();
    const int dx = hoch_degree(x);
    Tensor r = hoch_delta(m, brace(x, ys)) - brace(hoch_delta(m, x), ys);
    int prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto yi = ys;
        yi[i] = hoch_delta(m, ys[i]);
        r = r - brace(x, yi) * neg1(dx + prefix);
        if (i + 1 < n) {
            std::vector<Tensor> merged(ys.begin(), ys.begin() + i);
            merged.push_back(hoch_m2(m, ys[i], ys[i + 1]));
            merged.insert(merged.end(), ys.begin() + i + 2, ys.end());
            r = r - brace(x, merged) * neg1(dx + prefix);
        }
        prefix += hoch_degree(ys[i]);
    }
    std::vector<Tensor> tail(ys.begin() + 1, ys.end()), head(ys.begin(), ys.end() - 1);
    r = r + hoch_m2(m, ys.front(), brace(x, tail)) * neg1(dx * hoch_degree(ys.front()));
    r = r + hoch_m2(m, brace(x, head), ys.back());
    return r;
}

Tensor identity_iv(const Tensor& m, const Tensor& x, const Tensor& y, const Tensor& z) {
    return hoch_m2(m, hoch_m2(m, x, y), z) + hoch_m2(m, x, hoch_m2(m, y, z)) * neg1(hoch_degree(x));
}

Tensor v_residual(const Tensor& m, const Tensor& x1, const Tensor& x2, const std::vector<Tensor>& ys, int s1, int s2) {
    return brace(hoch_m2(m, x1, x2), ys) + hoch_m2(m, brace(x1, ys), x2) * s1 + hoch_m2(m, x1, brace(x2, ys)) * s2;
}

bool composition_pre_lie_at(const Tensor& x, const Tensor& y, const Tensor& z) {
    Tensor a = brace(brace(x, {y}), {z}) - brace(x, {brace(y, {z})});
    Tensor b = brace(brace(x, {z}), {y}) - brace(x, {brace(z, {y})});
    return a == b * neg1(hoch_degree(y) * hoch_degree(z));
}

bool gerstenhaber_jacobi_at(const Tensor& x, const Tensor& y, const Tensor& z) {
    const int dx = hoch_degree(x), dy = hoch_degree(y), dz = hoch_degree(z);
    Tensor j = gerstenhaber(x, gerstenhaber(y, z)) * neg1(dx * dz) + gerstenhaber(y, gerstenhaber(z, x)) * neg1(dy * dx) +
               gerstenhaber(z, gerstenhaber(x, y)) * neg1(dz * dy);
    return j.is_zero();
}

SuiteReport hochschild_suite(const ModelAlgebra& model, std::uint64_t seed, int arity_cap, int samples) {
    const Tensor& m = model.map("m(2)").t;
    if (m.arity() != 2 || !is_associative(m)) throw std::invalid_argument("model " + model.name + ": m(2) is not associative");
    for (const auto& e : model.basis.elements)
        if (e.degree != 0) throw std::invalid_argument("model " + model.name + ": hochschild suite needs an even algebra");
    if (arity_cap < 1) throw std::invalid_argument("arity cap must be at least 1");

    SuiteReport rep{"hochschild", model.name, seed, {}};
    Rng rng(seed);
    const std::size_t dim = model.basis.dim();
    auto draw = [&](std::size_t lo = 1) {
        std::size_t a = lo + static_cast<std::size_t>(rng.below(arity_cap - static_cast<int>(lo) + 1));
        return random_tensor(dim, a, rng);
    };
    // redraw until the biggest intermediate stays under kMaxArity
    auto draw_bounded = [&](std::size_t count, std::size_t slack) {
        while (true) {
            std::vector<Tensor> ts;
            std::size_t total = 0;
            for (std::size_t k = 0; k < count; ++k) {
                ts.push_back(draw());
                total += ts.back().arity();
            }
            if (total + slack <= kMaxArity + count) return ts;
        }
    };

    CheckResult c1{"(i) M(1)^2 = 0", true, 0, "", nullptr};
    CheckResult c2{"(ii) M(1) is a derivation of M(2)", true, 0, "", nullptr};
    CheckResult c3{"(iii) (1|n+1) identity, n = 1", true, 0, "", nullptr};
    CheckResult c3b{"(iii) (1|n+1) identity, n = 2", true, 0, "", nullptr};
    CheckResult c4{"(iv) M(2) associative", true, 0, "", nullptr};
    CheckResult cp{"composition is right pre-Lie", true, 0, "", nullptr};
    CheckResult cj{"Gerstenhaber bracket Jacobi", true, 0, "", nullptr};
    auto fail = [](CheckResult& c, int sample, const std::vector<const Tensor*>& ts) {
        if (!c.pass) return;
        c.pass = false;
        c.witness = {{"sample", sample}, {"arities", arities(ts)}};
    };

    for (int s = 0; s < samples; ++s) {
        Tensor x = draw();
        ++c1.samples;
        if (!identity_i(m, x).is_zero()) fail(c1, s, {&x});

        auto xy = draw_bounded(2, 2);
        ++c2.samples;
        if (!identity_ii(m, xy[0], xy[1]).is_zero()) fail(c2, s, {&xy[0], &xy[1]});

        auto t1 = draw_bounded(2, 1);
        ++c3.samples;
        if (!identity_iii(m, t1[0], {t1[1]}).is_zero()) fail(c3, s, {&t1[0], &t1[1]});

        std::vector<Tensor> t2;
        do t2 = draw_bounded(3, 1);
        while (t2[0].arity() < 2);
        ++c3b.samples;
        if (!identity_iii(m, t2[0], {t2[1], t2[2]}).is_zero()) fail(c3b, s, {&t2[0], &t2[1], &t2[2]});

        auto xyz = draw_bounded(3, 2);
        ++c4.samples;
        if (!identity_iv(m, xyz[0], xyz[1], xyz[2]).is_zero()) fail(c4, s, {&xyz[0], &xyz[1], &xyz[2]});

        auto p = draw_bounded(3, 0);
        ++cp.samples;
        if (!composition_pre_lie_at(p[0], p[1], p[2])) fail(cp, s, {&p[0], &p[1], &p[2]});
        ++cj.samples;
        if (!gerstenhaber_jacobi_at(p[0], p[1], p[2])) fail(cj, s, {&p[0], &p[1], &p[2]});
    }

    // (v) for n = 2 must fail under every sign choice
    CheckResult c5{"(v) fails: nonzero witness for n = 2", false, 0, "", nullptr};
    for (int s = 0; s < std::max(samples, 1) && !c5.pass; ++s) {
        auto t = draw_bounded(4, 2);
        ++c5.samples;
        std::vector<Tensor> ys{t[2], t[3]};
        bool all_nonzero = true;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                Tensor r = v_residual(m, t[0], t[1], ys, s1, s2);
                all_nonzero = all_nonzero && !r.is_zero();
            }
        if (all_nonzero) {
            c5.pass = true;
            c5.witness = {{"sample", s}, {"arities", arities({&t[0], &t[1], &t[2], &t[3]})}};
            c5.detail = "residual nonzero for all four sign choices";
        }
    }
    if (!c5.pass) c5.detail = "no witness found";

    rep.checks = {c1, c2, c3, c3b, c4, c5, cp, cj};
    return rep;
}

}  // namespace partopus
