#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "partopus/formal.hpp"
#include "partopus/partition.hpp"

namespace partopus {

using Vec = std::vector<Rational>;

struct BasisElement {
    std::string name;
    int degree = 0;
};

struct GradedBasis {
    std::vector<BasisElement> elements;

    std::size_t dim() const { return elements.size(); }
    int degree(std::size_t k) const { return elements[k].degree; }
    int parity(std::size_t k) const { return elements[k].degree & 1; }
    std::size_t index(const std::string& name) const;  // throws if unknown
    Vec unit(std::size_t k) const;
    Vec zero() const { return Vec(dim(), 0); }
    // homogeneous components of v, keyed by degree
    std::map<int, Vec> components(const Vec& v) const;
};

// Dense multilinear map k^{dim x arity} -> k^dim, entries indexed (inputs..., out).
class Tensor {
public:
    Tensor() = default;
    Tensor(std::size_t dim, std::size_t arity);

    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return arity_; }
    std::size_t rows() const { return data_.size() / (dim_ ? dim_ : 1); }  // dim^arity

    Rational& at(std::size_t row, std::size_t out) { return data_[row * dim_ + out]; }
    const Rational& at(std::size_t row, std::size_t out) const { return data_[row * dim_ + out]; }
    Rational& at(const std::vector<std::size_t>& in, std::size_t out) { return at(row_of(in), out); }
    const Rational& at(const std::vector<std::size_t>& in, std::size_t out) const { return at(row_of(in), out); }

    std::size_t row_of(const std::vector<std::size_t>& in) const;
    std::vector<std::size_t> inputs_of(std::size_t row) const;

    Vec apply(const std::vector<Vec>& args) const;
    Vec apply_basis(std::size_t row) const;

    bool is_zero() const;
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Rational& c) const;
    bool operator==(const Tensor& o) const { return dim_ == o.dim_ && arity_ == o.arity_ && data_ == o.data_; }

    static Tensor identity(std::size_t dim);

private:
    std::size_t dim_ = 0;
    std::size_t arity_ = 0;
    std::vector<Rational> data_;
};

struct StructureTensor {
    Partition type;
    int super_degree = 0;
    Tensor t;
};

// nonzero entries only where out degree = sum of input degrees + super
bool homogeneous(const GradedBasis& b, const Tensor& t, int super_degree);
bool parity_homogeneous(const GradedBasis& b, const Tensor& t, int super_degree);

struct ModelAlgebra {
    std::string name;
    GradedBasis basis;
    std::map<std::string, StructureTensor> maps;

    const StructureTensor& map(const std::string& n) const;
    nlohmann::json to_json() const;
    static ModelAlgebra from_json(const nlohmann::json& j);
};

// built-in library
ModelAlgebra dual_numbers();
ModelAlgebra upper_triangular();
ModelAlgebra grassmann2();
ModelAlgebra witness_algebra();       // non-associative
ModelAlgebra super_matrix_dga();      // End(k^{1|1}), d = [Q, .]
std::vector<std::string> builtin_models();
ModelAlgebra builtin_model(const std::string& name);
// builtin name or path to a JSON model file
ModelAlgebra load_model(const std::string& name_or_path);

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::mt19937_64 eng;
    int small(int bound = 3);  // uniform in [-bound, bound]
    int below(int n);          // uniform in [0, n)
};

Vec random_vec(std::size_t dim, Rng& rng);
Tensor random_tensor(std::size_t dim, std::size_t arity, Rng& rng);
Tensor random_homogeneous(const GradedBasis& b, std::size_t arity, int super_degree, Rng& rng);
Tensor random_parity_homogeneous(const GradedBasis& b, std::size_t arity, int super_degree, Rng& rng);

bool is_associative(const Tensor& m);

// symbols by head name, generators by name
struct Binding {
    GradedBasis basis;
    std::map<std::string, StructureTensor> maps;
    std::map<std::string, Vec> gens;
};

// Inhomogeneous generators are split into homogeneous components; sign
// exponents are evaluated on the chosen component degrees.
Vec realize(const FormalSum& s, const Binding& b);
bool residual_zero(const FormalSum& s, const Binding& b);

struct PreLieReport {
    bool pass = true;
    std::size_t triples = 0;
    std::string witness;
};

// right pre-Lie: (p1*p2)*p3 - p1*(p2*p3) symmetric in p2, p3
PreLieReport check_pre_lie(const std::vector<Partition>& family);
// the same over an abstract family: defect(i, j, k) == sign(j,k) * defect(i, k, j)
PreLieReport check_pre_lie(std::size_t n, const std::function<bool(std::size_t, std::size_t, std::size_t)>& symmetric_at,
                           const std::function<std::string(std::size_t, std::size_t, std::size_t)>& describe);

std::string vec_str(const Vec& v, const GradedBasis& b);
nlohmann::json vec_json(const Vec& v, const GradedBasis& b);


struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t samples = 0;
    std::string detail;
    nlohmann::json witness;  // null when there is nothing to report
};

struct SuiteReport {
    std::string suite;
    std::string model;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::string str() const;
    nlohmann::json to_json() const;
};

}  // namespace partopus
