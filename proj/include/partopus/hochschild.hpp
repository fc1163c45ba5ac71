#pragma once

#include <vector>

#include "partopus/models.hpp"

namespace partopus {

// Cochains on an even algebra are plain tensors; d(x) = arity - 1.
inline int hoch_degree(const Tensor& x) { return static_cast<int>(x.arity()) - 1; }

// x{y1,...,yk}: y's inserted in order, sign (-1)^{sum d(y_l) * (inputs before y_l)}
Tensor brace(const Tensor& x, const std::vector<Tensor>& ys);
// [x,y] = x{y} - (-1)^{d(x)d(y)} y{x}
Tensor gerstenhaber(const Tensor& x, const Tensor& y);
Tensor hoch_delta(const Tensor& m, const Tensor& x);                    // M(1) = [m, .]
Tensor hoch_m2(const Tensor& m, const Tensor& x, const Tensor& y);      // M(2) = m{x, y}

// residuals; each vanishes for associative m except v_residual
Tensor identity_i(const Tensor& m, const Tensor& x);
Tensor identity_ii(const Tensor& m, const Tensor& x, const Tensor& y);
Tensor identity_iii(const Tensor& m, const Tensor& x, const std::vector<Tensor>& ys);
Tensor identity_iv(const Tensor& m, const Tensor& x, const Tensor& y, const Tensor& z);
// L + s1 A + s2 B with L = M2(x1,x2){Y}, A = M2(x1{Y},x2), B = M2(x1,x2{Y})
Tensor v_residual(const Tensor& m, const Tensor& x1, const Tensor& x2, const std::vector<Tensor>& ys, int s1, int s2);

// (x{y}){z} - x{y{z}} symmetric in y, z up to (-1)^{d(y)d(z)}
bool composition_pre_lie_at(const Tensor& x, const Tensor& y, const Tensor& z);
bool gerstenhaber_jacobi_at(const Tensor& x, const Tensor& y, const Tensor& z);

// throws std::invalid_argument unless the model's m(2) is associative
SuiteReport hochschild_suite(const ModelAlgebra& model, std::uint64_t seed, int arity_cap = 3, int samples = 20);

}  // namespace partopus
