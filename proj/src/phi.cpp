#include "partopus/phi.hpp"

#include <stdexcept>

namespace partopus {

namespace {

int neg1(int e) { return (e & 1) ? -1 : 1; }

Vec add(Vec a, const Vec& b, const Rational& s = 1) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
}

Vec ap(const Tensor& t, const Vec& v) { return t.apply({v}); }

bool zero(const Vec& v) {
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

// [T, Phi^3_U]{a,b,c}, d(T) = 0
Vec br_t_phi3(const PhiContext& c, const Tensor& t, int pt, const Tensor& u, int pu, const Vec& a, int pa, const Vec& b,
              int pb, const Vec& x) {
    Vec val = ap(t, phi3(c, u, pu, a, pa, b, pb, x));
    Vec ins = phi3(c, u, pu, ap(t, a), pa + pt, b, pb, x);
    ins = add(ins, phi3(c, u, pu, a, pa, ap(t, b), pb + pt, x), neg1(pt * pa));
    ins = add(ins, phi3(c, u, pu, a, pa, b, pb, ap(t, x)), neg1(pt * (pa + pb)));
    return add(val, ins, -neg1(pt * pu));
}

// [T, Phi^2_U]{a,b}
Vec br_t_phi2(const PhiContext& c, const Tensor& t, int pt, const Tensor& u, int pu, const Vec& a, int pa, const Vec& b) {
    Vec val = ap(t, phi2(c, u, pu, a, pa, b));
    Vec ins = phi2(c, u, pu, ap(t, a), pa + pt, b);
    ins = add(ins, phi2(c, u, pu, a, pa, ap(t, b)), neg1(pt * pa));
    return add(val, ins, -neg1(pt * pu));
}

// [Phi^2_T, ad(Phi^2_U){a}]{b,c}; V = Phi^2_U(a, .) has degree |U| + |a|
Vec br_phi2_ad(const PhiContext& c, const Tensor& t, int pt, const Tensor& u, int pu, const Vec& a, int pa, const Vec& b,
               int pb, const Vec& x) {
    const int pv = pu + pa;
    auto v = [&](const Vec& y) { return phi2(c, u, pu, a, pa, y); };
    Vec first = add(phi2(c, t, pt, v(b), pb + pv, x), phi2(c, t, pt, b, pb, v(x)), neg1(pv * pb));
    return add(first, v(phi2(c, t, pt, b, pb, x)), -neg1(pt * pv));
}

}  // namespace

Vec phi2(const PhiContext& c, const Tensor& t, int pt, const Vec& a, int pa, const Vec& b) {
    Vec r = ap(t, c.mul(a, b));
    r = add(r, c.mul(ap(t, a), b), -1);
    return add(r, c.mul(a, ap(t, b)), -neg1(pt * pa));
}

Vec phi3(const PhiContext& c, const Tensor& t, int pt, const Vec& a, int pa, const Vec& b, int pb, const Vec& x) {
    Vec r = phi2(c, t, pt, a, pa, c.mul(b, x));
    r = add(r, c.mul(phi2(c, t, pt, a, pa, b), x), -1);
    return add(r, c.mul(b, phi2(c, t, pt, a, pa, x)), -neg1(pb * (pt + pa)));
}

Tensor phi2_tensor(const PhiContext& c, const Tensor& t, int pt) {
    const std::size_t n = c.basis.dim();
    Tensor out(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = phi2(c, t, pt, c.basis.unit(i), c.basis.parity(i), c.basis.unit(j));
            for (std::size_t o = 0; o < n; ++o) out.at({i, j}, o) = v[o];
        }
    return out;
}

Tensor phi3_tensor(const PhiContext& c, const Tensor& t, int pt) {
    const std::size_t n = c.basis.dim();
    Tensor out(n, 3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = phi3(c, t, pt, c.basis.unit(i), c.basis.parity(i), c.basis.unit(j), c.basis.parity(j),
                             c.basis.unit(k));
                for (std::size_t o = 0; o < n; ++o) out.at({i, j, k}, o) = v[o];
            }
    return out;
}

Vec phi_identity_ii(const PhiContext& c, const Tensor& d, std::size_t a, std::size_t b) {
    const Vec ea = c.basis.unit(a), eb = c.basis.unit(b);
    const int pa = c.basis.parity(a);
    Vec r = ap(d, phi2(c, d, 1, ea, pa, eb));
    r = add(r, phi2(c, d, 1, ap(d, ea), pa + 1, eb));
    return add(r, phi2(c, d, 1, ea, pa, ap(d, eb)), neg1(pa));
}

Vec phi_identity_iv(const PhiContext& c, const Tensor& d, std::size_t a, std::size_t b, std::size_t x) {
    const Vec ea = c.basis.unit(a), eb = c.basis.unit(b), ex = c.basis.unit(x);
    const int pa = c.basis.parity(a), pb = c.basis.parity(b);
    return add(br_t_phi3(c, d, 1, d, 1, ea, pa, eb, pb, ex), br_phi2_ad(c, d, 1, d, 1, ea, pa, eb, pb, ex));
}

Tensor compose_unary(const Tensor& t, const Tensor& u) {
    const std::size_t n = t.dim();
    Tensor out(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        Vec v = ap(t, u.apply_basis(i));
        for (std::size_t o = 0; o < n; ++o) out.at({i}, o) = v[o];
    }
    return out;
}

Vec phi_lemma2(const PhiContext& c, const Tensor& t, const Tensor& u, std::size_t a, std::size_t b) {
    const Vec ea = c.basis.unit(a), eb = c.basis.unit(b);
    const int pa = c.basis.parity(a);
    Tensor tu = compose_unary(t, u) + compose_unary(u, t);
    Vec lhs = phi2(c, tu, 0, ea, pa, eb);
    Vec rhs = add(br_t_phi2(c, t, 1, u, 1, ea, pa, eb), br_t_phi2(c, u, 1, t, 1, ea, pa, eb));
    return add(lhs, rhs, -1);
}

Vec phi_lemma3(const PhiContext& c, const Tensor& t, const Tensor& u, std::size_t a, std::size_t b, std::size_t x) {
    const Vec ea = c.basis.unit(a), eb = c.basis.unit(b), ex = c.basis.unit(x);
    const int pa = c.basis.parity(a), pb = c.basis.parity(b);
    Tensor tu = compose_unary(t, u) + compose_unary(u, t);
    Vec lhs = phi3(c, tu, 0, ea, pa, eb, pb, ex);
    Vec rhs = br_t_phi3(c, t, 1, u, 1, ea, pa, eb, pb, ex);
    rhs = add(rhs, br_t_phi3(c, u, 1, t, 1, ea, pa, eb, pb, ex));
    rhs = add(rhs, br_phi2_ad(c, t, 1, u, 1, ea, pa, eb, pb, ex));
    rhs = add(rhs, br_phi2_ad(c, u, 1, t, 1, ea, pa, eb, pb, ex));
    return add(lhs, rhs, -1);
}

Tensor random_square_zero(const GradedBasis& b, int z_degree, Rng& rng) {
    if ((z_degree & 1) == 0) throw std::invalid_argument("square-zero operator must be odd");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Tensor d(b.dim(), 1);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t o = 0; o < b.dim(); ++o)
                if (b.degree(o) == b.degree(i) + z_degree) d.at({i}, o) = rng.small(2);
        if (!d.is_zero() && compose_unary(d, d).is_zero()) return d;
    }
    throw std::runtime_error("no square-zero operator found");
}

SuiteReport phi_suite(const ModelAlgebra& model, std::uint64_t seed, int samples) {
    const auto& mm = model.map("m(2)");
    if (mm.t.arity() != 2 || (mm.super_degree & 1)) throw std::invalid_argument("phi suite needs an even binary product");
    PhiContext c{model.basis, mm.t};
    const std::size_t n = c.basis.dim();
    SuiteReport rep{"phi", model.name, seed, {}};
    Rng rng(seed);

    CheckResult ci{"(i) Delta^2 = 0", true, 0, "", nullptr};
    CheckResult cii{"(ii) Delta is a derivation of Phi(2)", true, 0, "", nullptr};
    CheckResult ciii{"(iii) Delta is a derivation of Phi(1|1)", true, 0, "", nullptr};
    CheckResult civ{"(iv) (1|2) identity", true, 0, "", nullptr};
    CheckResult cl{"bracket lemma for odd T, U", true, 0, "", nullptr};
    CheckResult cnt{"Phi(2) nonzero for some Delta", false, 0, "", nullptr};

    std::vector<Tensor> deltas;
    for (int s = 0; s < samples; ++s) deltas.push_back(random_square_zero(c.basis, s % 2 == 0 ? 1 : -1, rng));
    for (std::size_t s = 0; s < deltas.size(); ++s) {
        const Tensor& d = deltas[s];
        auto fail = [&](CheckResult& r, nlohmann::json w) {
            if (!r.pass) return;
            r.pass = false;
            w["delta"] = s;
            r.witness = w;
        };
        ++ci.samples;
        if (!compose_unary(d, d).is_zero()) fail(ci, nlohmann::json::object());
        ++cii.samples;
        ++ciii.samples;
        ++civ.samples;
        if (!phi2_tensor(c, d, 1).is_zero()) cnt.pass = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (!zero(phi_identity_ii(c, d, a, b))) {
                    fail(cii, {{"a", c.basis.elements[a].name}, {"b", c.basis.elements[b].name}});
                    fail(ciii, {{"a", c.basis.elements[a].name}, {"b", c.basis.elements[b].name}});
                }
                for (std::size_t x = 0; x < n; ++x)
                    if (!zero(phi_identity_iv(c, d, a, b, x)))
                        fail(civ, {{"a", c.basis.elements[a].name},
                                   {"b", c.basis.elements[b].name},
                                   {"c", c.basis.elements[x].name}});
            }
    }
    cnt.samples = deltas.size();

    // lemma on arbitrary odd operators
    for (int s = 0; s < samples; ++s) {
        Tensor t = random_parity_homogeneous(c.basis, 1, 1, rng), u = random_parity_homogeneous(c.basis, 1, 1, rng);
        ++cl.samples;
        for (std::size_t a = 0; a < n && cl.pass; ++a)
            for (std::size_t b = 0; b < n && cl.pass; ++b) {
                if (!zero(phi_lemma2(c, t, u, a, b))) {
                    cl.pass = false;
                    cl.witness = {{"sample", s}, {"degree", 2}};
                }
                for (std::size_t x = 0; x < n && cl.pass; ++x)
                    if (!zero(phi_lemma3(c, t, u, a, b, x))) {
                        cl.pass = false;
                        cl.witness = {{"sample", s}, {"degree", 3}};
                    }
            }
    }
    rep.checks = {ci, cii, ciii, civ, cl, cnt};

    if (auto it = model.maps.find("Delta"); it != model.maps.end()) {
        const Tensor& d = it->second.t;
        CheckResult cd{"derivation Delta: Phi(2) = Phi(1|2) = 0", true, 1, "", nullptr};
        if (!compose_unary(d, d).is_zero() || (it->second.super_degree & 1) == 0) {
            cd.pass = false;
            cd.detail = "model Delta is not odd square-zero";
        } else if (!phi2_tensor(c, d, 1).is_zero() || !phi3_tensor(c, d, 1).is_zero()) {
            cd.pass = false;
            cd.detail = "Phi operators of the model Delta do not vanish";
        }
        rep.checks.push_back(cd);
    }
    return rep;
}

}  // namespace partopus
