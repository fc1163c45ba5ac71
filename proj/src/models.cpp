#include "partopus/models.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace partopus {

std::size_t GradedBasis::index(const std::string& name) const {
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (elements[k].name == name) return k;
    throw std::invalid_argument("unknown basis element " + name);
}

Vec GradedBasis::unit(std::size_t k) const {
    Vec v(dim(), 0);
    v[k] = 1;
    return v;
}

std::map<int, Vec> GradedBasis::components(const Vec& v) const {
    std::map<int, Vec> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        auto it = out.try_emplace(degree(k), zero()).first;
        it->second[k] = v[k];
    }
    return out;
}

Tensor::Tensor(std::size_t dim, std::size_t arity) : dim_(dim), arity_(arity) {
    std::size_t rows = 1;
    for (std::size_t k = 0; k < arity; ++k) rows *= dim;
    data_.assign(rows * dim, 0);
}

std::size_t Tensor::row_of(const std::vector<std::size_t>& in) const {
    if (in.size() != arity_) throw std::invalid_argument("tensor: wrong number of inputs");
    std::size_t r = 0;
    for (std::size_t k : in) r = r * dim_ + k;
    return r;
}

std::vector<std::size_t> Tensor::inputs_of(std::size_t row) const {
    std::vector<std::size_t> in(arity_);
    for (std::size_t k = arity_; k-- > 0;) {
        in[k] = row % dim_;
        row /= dim_;
    }
    return in;
}

Vec Tensor::apply_basis(std::size_t row) const { return Vec(data_.begin() + row * dim_, data_.begin() + (row + 1) * dim_); }

Vec Tensor::apply(const std::vector<Vec>& args) const {
    if (args.size() != arity_) throw std::invalid_argument("tensor: arity mismatch");
    Vec out(dim_, 0);
    // walk only the nonzero coordinates of each argument
    std::vector<std::vector<std::size_t>> nz(arity_);
    for (std::size_t k = 0; k < arity_; ++k) {
        if (args[k].size() != dim_) throw std::invalid_argument("tensor: argument dimension mismatch");
        for (std::size_t i = 0; i < dim_; ++i)
            if (args[k][i] != 0) nz[k].push_back(i);
        if (nz[k].empty()) return out;
    }
    std::function<void(std::size_t, std::size_t, Rational)> rec = [&](std::size_t k, std::size_t row, Rational c) {
        if (k == arity_) {
            for (std::size_t o = 0; o < dim_; ++o)
                if (data_[row * dim_ + o] != 0) out[o] += c * data_[row * dim_ + o];
            return;
        }
        for (std::size_t i : nz[k]) rec(k + 1, row * dim_ + i, c * args[k][i]);
    };
    rec(0, 0, 1);
    return out;
}

bool Tensor::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_) throw std::invalid_argument("tensor: shape mismatch");
    Tensor r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o * Rational(-1); }

Tensor Tensor::operator*(const Rational& c) const {
    Tensor r = *this;
    for (auto& q : r.data_) q *= c;
    return r;
}

Tensor Tensor::identity(std::size_t dim) {
    Tensor t(dim, 1);
    for (std::size_t k = 0; k < dim; ++k) t.at(k, k) = 1;
    return t;
}

namespace {

bool homogeneous_by(const GradedBasis& b, const Tensor& t, int super_degree, bool mod2) {
    for (std::size_t r = 0; r < t.rows(); ++r) {
        int in = super_degree;
        for (std::size_t k : t.inputs_of(r)) in += b.degree(k);
        for (std::size_t o = 0; o < t.dim(); ++o) {
            if (t.at(r, o) == 0) continue;
            int diff = b.degree(o) - in;
            if (mod2 ? (diff & 1) != 0 : diff != 0) return false;
        }
    }
    return true;
}

}  // namespace

bool homogeneous(const GradedBasis& b, const Tensor& t, int super_degree) { return homogeneous_by(b, t, super_degree, false); }
bool parity_homogeneous(const GradedBasis& b, const Tensor& t, int super_degree) {
    return homogeneous_by(b, t, super_degree, true);
}

const StructureTensor& ModelAlgebra::map(const std::string& n) const {
    auto it = maps.find(n);
    if (it == maps.end()) throw std::invalid_argument("model " + name + " has no map " + n);
    return it->second;
}

nlohmann::json ModelAlgebra::to_json() const {
    nlohmann::json basis_j = nlohmann::json::array();
    for (const auto& e : basis.elements) basis_j.push_back({{"name", e.name}, {"degree", e.degree}});
    nlohmann::json maps_j = nlohmann::json::object();
    for (const auto& [n, st] : maps) {
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t r = 0; r < st.t.rows(); ++r) {
            auto in = st.t.inputs_of(r);
            for (std::size_t o = 0; o < st.t.dim(); ++o) {
                if (st.t.at(r, o) == 0) continue;
                nlohmann::json slots = nlohmann::json::array();
                std::size_t k = 0;
                for (int s : st.type.slots()) {
                    nlohmann::json cs = nlohmann::json::array();
                    for (int j = 0; j < s; ++j) cs.push_back(basis.elements[in[k++]].name);
                    slots.push_back(cs);
                }
                entries.push_back({{"in", slots}, {"out", basis.elements[o].name}, {"coeff", to_string(st.t.at(r, o))}});
            }
        }
        maps_j[n] = {{"type", partopus::to_json(st.type)}, {"super", st.super_degree}, {"entries", entries}};
    }
    return {{"name", name}, {"basis", basis_j}, {"maps", maps_j}};
}

ModelAlgebra ModelAlgebra::from_json(const nlohmann::json& j) {
    ModelAlgebra m;
    m.name = j.value("name", std::string("custom"));
    std::set<std::string> seen;
    for (const auto& e : j.at("basis")) {
        BasisElement be{e.at("name").get<std::string>(), e.value("degree", 0)};
        if (!seen.insert(be.name).second) throw std::invalid_argument("duplicate basis name " + be.name);
        m.basis.elements.push_back(be);
    }
    for (const auto& [n, mj] : j.at("maps").items()) {
        StructureTensor st;
        st.type = partition_from_json(mj.at("type"));
        st.super_degree = mj.value("super", 0);
        st.t = Tensor(m.basis.dim(), static_cast<std::size_t>(st.type.total()));
        for (const auto& en : mj.at("entries")) {
            std::vector<std::size_t> in;
            const auto& slots = en.at("in");
            if (slots.size() != st.type.size()) throw std::invalid_argument("map " + n + ": entry slots do not match type");
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (static_cast<int>(slots[s].size()) != st.type[s])
                    throw std::invalid_argument("map " + n + ": entry arity does not match type");
                for (const auto& x : slots[s]) in.push_back(m.basis.index(x.get<std::string>()));
            }
            const auto& cj = en.at("coeff");
            Rational c = cj.is_string() ? rational_from_string(cj.get<std::string>()) : Rational(cj.get<long>());
            st.t.at(in, m.basis.index(en.at("out").get<std::string>())) += c;
        }
        if (!homogeneous(m.basis, st.t, st.super_degree))
            throw std::invalid_argument("map " + n + " is not homogeneous of degree " + std::to_string(st.super_degree));
        m.maps.emplace(n, std::move(st));
    }
    return m;
}

namespace {

StructureTensor product_from(std::size_t dim, const std::function<void(std::size_t, std::size_t, Vec&)>& mul) {
    StructureTensor st{Partition{2}, 0, Tensor(dim, 2)};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vec v(dim, 0);
            mul(i, j, v);
            for (std::size_t o = 0; o < dim; ++o) st.t.at({i, j}, o) = v[o];
        }
    return st;
}

// sign of t_i t_j in the Grassmann algebra on masks
int grassmann_sign(unsigned i, unsigned j) {
    int s = 0;
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < 2; ++b)
            if (((i >> a) & 1) && ((j >> b) & 1) && a > b) ++s;
    return (s & 1) ? -1 : 1;
}

}  // namespace

ModelAlgebra dual_numbers() {
    ModelAlgebra m{"dual-numbers", {{{"1", 0}, {"e", 0}}}, {}};
    m.maps.emplace("m(2)", product_from(2, [](std::size_t i, std::size_t j, Vec& v) {
                       if (i + j < 2) v[i + j] = 1;
                   }));
    return m;
}

ModelAlgebra upper_triangular() {
    // E11, E12, E22
    ModelAlgebra m{"upper-triangular", {{{"E11", 0}, {"E12", 0}, {"E22", 0}}}, {}};
    const int row[] = {0, 0, 1}, col[] = {0, 1, 1};
    m.maps.emplace("m(2)", product_from(3, [&](std::size_t i, std::size_t j, Vec& v) {
                       if (col[i] != row[j]) return;
                       for (std::size_t k = 0; k < 3; ++k)
                           if (row[k] == row[i] && col[k] == col[j]) v[k] = 1;
                   }));
    return m;
}

ModelAlgebra grassmann2() {
    ModelAlgebra m{"grassmann2", {{{"1", 0}, {"t1", 1}, {"t2", 1}, {"t1t2", 2}}}, {}};
    m.maps.emplace("m(2)", product_from(4, [](std::size_t i, std::size_t j, Vec& v) {
                       if (i & j) return;
                       v[i | j] = grassmann_sign(static_cast<unsigned>(i), static_cast<unsigned>(j));
                   }));
    // d/dt1, an odd derivation of degree -1
    StructureTensor d{Partition{1}, -1, Tensor(4, 1)};
    d.t.at({1}, 0) = 1;
    d.t.at({3}, 2) = 1;
    m.maps.emplace("Delta", std::move(d));
    return m;
}

ModelAlgebra witness_algebra() {
    // e.e = f, e.f = e, f.anything = 0
    ModelAlgebra m{"witness", {{{"e", 0}, {"f", 0}}}, {}};
    m.maps.emplace("m(2)", product_from(2, [](std::size_t i, std::size_t j, Vec& v) {
                       if (i == 0 && j == 0) v[1] = 1;
                       if (i == 0 && j == 1) v[0] = 1;
                   }));
    return m;
}

ModelAlgebra super_matrix_dga() {
    // End(k^{1|1}) with e1 even (degree 0), e2 odd (degree 1); Eij e_j = e_i
    ModelAlgebra m{"super-matrix", {{{"E11", 0}, {"E12", -1}, {"E21", 1}, {"E22", 0}}}, {}};
    const int row[] = {0, 0, 1, 1}, col[] = {0, 1, 0, 1};
    auto prod = product_from(4, [&](std::size_t i, std::size_t j, Vec& v) {
        if (col[i] != row[j]) return;
        for (std::size_t k = 0; k < 4; ++k)
            if (row[k] == row[i] && col[k] == col[j]) v[k] = 1;
    });
    // d X = Q X - (-1)^{|X|} X Q with Q = E21
    StructureTensor d{Partition{1}, 1, Tensor(4, 1)};
    for (std::size_t x = 0; x < 4; ++x) {
        Vec qx = prod.t.apply({m.basis.unit(2), m.basis.unit(x)});
        Vec xq = prod.t.apply({m.basis.unit(x), m.basis.unit(2)});
        int s = m.basis.parity(x) ? -1 : 1;
        for (std::size_t o = 0; o < 4; ++o) d.t.at({x}, o) = qx[o] - s * xq[o];
    }
    m.maps.emplace("m(2)", std::move(prod));
    m.maps.emplace("m(1)", std::move(d));
    return m;
}

std::vector<std::string> builtin_models() { return {"dual-numbers", "upper-triangular", "grassmann2", "witness", "super-matrix"}; }

ModelAlgebra builtin_model(const std::string& name) {
    if (name == "dual-numbers") return dual_numbers();
    if (name == "upper-triangular") return upper_triangular();
    if (name == "grassmann2") return grassmann2();
    if (name == "witness") return witness_algebra();
    if (name == "super-matrix") return super_matrix_dga();
    throw std::invalid_argument("unknown model " + name);
}

ModelAlgebra load_model(const std::string& name_or_path) {
    for (const auto& n : builtin_models())
        if (n == name_or_path) return builtin_model(n);
    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("unknown model " + name_or_path);
    return ModelAlgebra::from_json(nlohmann::json::parse(in));
}

int Rng::small(int bound) { return std::uniform_int_distribution<int>(-bound, bound)(eng); }
int Rng::below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }

Vec random_vec(std::size_t dim, Rng& rng) {
    Vec v(dim);
    for (auto& q : v) q = rng.small();
    return v;
}

Tensor random_tensor(std::size_t dim, std::size_t arity, Rng& rng) {
    Tensor t(dim, arity);
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t o = 0; o < dim; ++o) t.at(r, o) = rng.small();
    return t;
}

namespace {

Tensor random_graded(const GradedBasis& b, std::size_t arity, int super_degree, Rng& rng, bool mod2) {
    Tensor t(b.dim(), arity);
    for (std::size_t r = 0; r < t.rows(); ++r) {
        int in = super_degree;
        for (std::size_t k : t.inputs_of(r)) in += b.degree(k);
        for (std::size_t o = 0; o < b.dim(); ++o) {
            int diff = b.degree(o) - in;
            if (mod2 ? (diff & 1) == 0 : diff == 0) t.at(r, o) = rng.small();
        }
    }
    return t;
}

}  // namespace

Tensor random_homogeneous(const GradedBasis& b, std::size_t arity, int super_degree, Rng& rng) {
    return random_graded(b, arity, super_degree, rng, false);
}

Tensor random_parity_homogeneous(const GradedBasis& b, std::size_t arity, int super_degree, Rng& rng) {
    return random_graded(b, arity, super_degree, rng, true);
}

bool is_associative(const Tensor& m) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei(n, 0), ej(n, 0), ek(n, 0);
                ei[i] = ej[j] = ek[k] = 1;
                if (m.apply({m.apply({ei, ej}), ek}) != m.apply({ei, m.apply({ej, ek})})) return false;
            }
    return true;
}

namespace {

void collect_gens(const Expr& e, std::set<std::string>& out) {
    if (e.gen) {
        out.insert(e.head);
        return;
    }
    for (const auto& s : e.slots)
        for (const auto& c : s) collect_gens(c, out);
}

struct Realizer {
    const Binding& b;
    std::map<std::string, const Vec*> chosen;

    const StructureTensor& tensor(const Expr& e) const {
        auto it = b.maps.find(e.head);
        if (it == b.maps.end()) throw std::invalid_argument("unbound symbol " + e.head);
        const auto& st = it->second;
        if (e.super && ((*e.super - st.super_degree) & 1))
            throw std::invalid_argument("degree mismatch for " + e.head);
        if (st.t.arity() != e.arity()) throw std::invalid_argument("arity mismatch for " + e.head);
        return st;
    }

    Vec eval(const Expr& e) const {
        if (e.gen) return *chosen.at(e.head);
        std::vector<Vec> args;
        for (const auto* c : e.flat_args()) args.push_back(eval(*c));
        return tensor(e).t.apply(args);
    }
};

}  // namespace

Vec realize(const FormalSum& s, const Binding& b) {
    Vec out = b.basis.zero();
    for (const auto& t : s.terms()) {
        std::set<std::string> names;
        collect_gens(t.expr, names);
        std::vector<std::string> gs(names.begin(), names.end());
        std::vector<std::vector<std::pair<int, Vec>>> comps;
        bool vanishes = false;
        for (const auto& g : gs) {
            auto it = b.gens.find(g);
            if (it == b.gens.end()) throw std::invalid_argument("unbound generator " + g);
            auto cm = b.basis.components(it->second);
            comps.emplace_back(cm.begin(), cm.end());
            vanishes = vanishes || comps.back().empty();
        }
        if (!vanishes) {
            Realizer r{b, {}};
            std::map<std::string, int> deg;
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
                if (k == gs.size()) {
                    int e = t.sign.evaluate([&](const std::string& v) {
                        if (auto d = deg.find(v); d != deg.end()) return d->second;
                        auto m = b.maps.find(v);
                        if (m == b.maps.end()) throw std::invalid_argument("unbound degree |" + v + "|");
                        return m->second.super_degree;
                    });
                    Vec val = r.eval(t.expr);
                    Rational c = e ? Rational(-t.coeff) : t.coeff;
                    for (std::size_t o = 0; o < out.size(); ++o) out[o] += c * val[o];
                    return;
                }
                for (const auto& [d, v] : comps[k]) {
                    deg[gs[k]] = d;
                    r.chosen[gs[k]] = &v;
                    rec(k + 1);
                }
            };
            rec(0);
        }
    }
    return out;
}

bool residual_zero(const FormalSum& s, const Binding& b) {
    for (const auto& q : realize(s, b))
        if (q != 0) return false;
    return true;
}

PreLieReport check_pre_lie(std::size_t n, const std::function<bool(std::size_t, std::size_t, std::size_t)>& symmetric_at,
                           const std::function<std::string(std::size_t, std::size_t, std::size_t)>& describe) {
    PreLieReport r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ++r.triples;
                if (r.pass && !symmetric_at(i, j, k)) {
                    r.pass = false;
                    r.witness = describe(i, j, k);
                }
            }
    return r;
}

PreLieReport check_pre_lie(const std::vector<Partition>& family) {
    return check_pre_lie(
        family.size(),
        [&](std::size_t i, std::size_t j, std::size_t k) {
            return pre_lie_defect(family[i], family[j], family[k]) == pre_lie_defect(family[i], family[k], family[j]);
        },
        [&](std::size_t i, std::size_t j, std::size_t k) {
            return "(" + family[i].str() + "," + family[j].str() + "," + family[k].str() + "): " +
                   pre_lie_defect(family[i], family[j], family[k]).str() + " vs " +
                   pre_lie_defect(family[i], family[k], family[j]).str();
        });
}

std::string vec_str(const Vec& v, const GradedBasis& b) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        bool neg = sgn(v[k]) < 0;
        Rational mag = abs(v[k]);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mag != 1) out += mag.get_str() + " ";
        out += b.elements[k].name;
    }
    return out.empty() ? "0" : out;
}

nlohmann::json vec_json(const Vec& v, const GradedBasis& b) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) j[b.elements[k].name] = to_string(v[k]);
    return j;
}


bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteReport::str() const {
    std::ostringstream os;
    os << "suite " << suite << " on " << model << " (seed " << seed << ")\n";
    for (const auto& c : checks) {
        os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.samples << " samples]";
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
        if (!c.witness.is_null()) os << "    witness: " << c.witness.dump() << "\n";
    }
    os << (pass() ? "all checks passed" : "verification failed") << "\n";
    return os.str();
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j = {{"name", c.name}, {"pass", c.pass}, {"samples", c.samples}, {"detail", c.detail}};
        if (!c.witness.is_null()) j["witness"] = c.witness;
        cs.push_back(j);
    }
    return {{"suite", suite}, {"model", model}, {"seed", seed}, {"pass", pass()}, {"checks", cs}};
}

}  // namespace partopus
