#pragma once

#include "partopus/models.hpp"

namespace partopus {

// Operators on a superalgebra (A, m) with a homogeneous basis. A unary
// operator is a Tensor of arity 1 together with its parity.
struct PhiContext {
    GradedBasis basis;
    Tensor m;  // arity 2, even, any algebra

    Vec mul(const Vec& a, const Vec& b) const { return m.apply({a, b}); }
};

// Phi^2_T(a,b) = T(ab) - T(a)b - (-1)^{|T||a|} a T(b)
Vec phi2(const PhiContext& c, const Tensor& t, int pt, const Vec& a, int pa, const Vec& b);
// Phi^3_T(a,b,c) = Phi^2_T(a,bc) - Phi^2_T(a,b)c - (-1)^{|b|(|T|+|a|)} b Phi^2_T(a,c)
Vec phi3(const PhiContext& c, const Tensor& t, int pt, const Vec& a, int pa, const Vec& b, int pb, const Vec& x);

Tensor phi2_tensor(const PhiContext& c, const Tensor& t, int pt);
Tensor phi3_tensor(const PhiContext& c, const Tensor& t, int pt);

// residuals on basis elements
Vec phi_identity_ii(const PhiContext& c, const Tensor& d, std::size_t a, std::size_t b);
Vec phi_identity_iv(const PhiContext& c, const Tensor& d, std::size_t a, std::size_t b, std::size_t x);
// Phi^3_{[T,U]} minus the bracket expansion, for odd T, U and [T,U] = TU + UT
Vec phi_lemma2(const PhiContext& c, const Tensor& t, const Tensor& u, std::size_t a, std::size_t b);
Vec phi_lemma3(const PhiContext& c, const Tensor& t, const Tensor& u, std::size_t a, std::size_t b, std::size_t x);

// odd operator of Z-degree +1 or -1 with D^2 = 0, D != 0
Tensor random_square_zero(const GradedBasis& b, int z_degree, Rng& rng);
Tensor compose_unary(const Tensor& t, const Tensor& u);  // t after u

// needs m(2); uses the model's "Delta" for the degenerate check when present
SuiteReport phi_suite(const ModelAlgebra& model, std::uint64_t seed, int samples = 5);

}  // namespace partopus
