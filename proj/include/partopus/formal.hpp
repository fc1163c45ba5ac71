#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "partopus/parity.hpp"
#include "partopus/partition.hpp"

namespace partopus {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// A generator (element of A) or an application of a named map to
// slot-structured children. A generator has type (0): d = -1, dbar = 0.
struct Expr {
    std::string head;
    bool gen = true;
    std::optional<int> super;  // concrete degree; empty means symbolic |head|
    std::vector<std::vector<Expr>> slots;

    static Expr generator(std::string name, std::optional<int> super = std::nullopt);
    static Expr apply(std::string name, std::optional<int> super, std::vector<std::vector<Expr>> slots);

    Parity self_parity() const;
    Parity total_parity() const;  // sum over the whole subtree
    Partition type() const;
    int d() const { return gen ? -1 : type().d(); }
    int dbar() const { return gen ? 0 : type().dbar(); }
    std::size_t arity() const;
    std::vector<const Expr*> flat_args() const;
    std::size_t node_count() const;

    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;
    static Expr from_json(const nlohmann::json& j);
};

int compare(const Expr& a, const Expr& b);
inline bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
inline bool operator<(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

// coeff * (-1)^sign * expr
struct Term {
    Rational coeff;
    Parity sign;
    Expr expr;
};

class FormalSum {
public:
    FormalSum() = default;
    explicit FormalSum(Term t) { terms_.push_back(std::move(t)); }
    static FormalSum of(const Expr& e, Rational c = 1, Parity sign = {});

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    void push(Term t) { terms_.push_back(std::move(t)); }
    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    FormalSum scaled(const Rational& c, const Parity& sign = {}) const;

    // sorted, like terms combined, zeros dropped, constant sign parts folded,
    // identity maps applied to one argument replaced by that argument
    FormalSum normalized() const;

    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;
    static FormalSum from_json(const nlohmann::json& j);

private:
    std::vector<Term> terms_;
};

FormalSum normalize(const FormalSum& s);
bool equal(const FormalSum& a, const FormalSum& b);
// same expressions with the same coefficient magnitudes; signs ignored
bool equal_up_to_sign(const FormalSum& a, const FormalSum& b);

enum class SignRule { bigraded, total };

struct Graded {
    int d = -1;
    int dbar = 0;
    Parity super;
};

Graded graded_of(const Expr& symbol_node);
Parity swap_exponent(const Graded& u, const Graded& v, SignRule rule);
// after[k] = index in `before` of the k-th symbol of the new order
Parity koszul_exponent(const std::vector<Graded>& before, const std::vector<int>& after, SignRule rule);
int koszul_sign(const std::vector<Graded>& before, const std::vector<int>& after, SignRule rule);

// sign exponent sum_{i} (n-i) ||a_i|| for a node's flattened arguments
Parity tilde_exponent(const Expr& app);
FormalSum apply_tilde(const FormalSum& s);

}  // namespace partopus
