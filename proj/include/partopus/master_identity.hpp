#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "partopus/composition.hpp"

namespace partopus {

struct Factorization {
    Partition outer;
    Partition inner;
    std::int64_t multiplicity = 0;  // coefficient of the target in star_raw(outer, inner)

    bool type_ii() const;  // inner is (1|0) or (0|1)
};

enum class SymbolFilter { none, a_infinity, ones };

struct IdentityOptions {
    bool type_ii_coefficients = true;  // false: the coefficient-free variant (--kvz)
    SymbolFilter filter = SymbolFilter::none;
};

// name used for the structure map of type p, e.g. "m(1|2)"
std::string structure_symbol(const Partition& p);
// |m(p)| = 1 - d - dbar
int structure_degree(const Partition& p);
PMap structure_map(const Partition& p);

// every (outer, inner) over B plus (1|0), (0|1) with target in outer*inner;
// throws std::invalid_argument if target is not regular
// the filter keeps outer and inner inside the substructure; (1|0), (0|1) survive only unfiltered
std::vector<Factorization> factorizations(const Partition& target, SymbolFilter filter = SymbolFilter::none);

struct IdentityRow {
    Factorization f;
    std::size_t subdivisions = 0;
    FormalSum terms;
};

std::vector<IdentityRow> type_i_rows(const Partition& target, SymbolFilter filter = SymbolFilter::none);
FormalSum type_i_terms(const Partition& target, SymbolFilter filter = SymbolFilter::none);
FormalSum type_ii_terms(const Partition& target, bool include_coefficients = true);

struct IdentityReport {
    Partition target;
    IdentityOptions options;
    std::vector<IdentityRow> rows;
    FormalSum type_i;
    FormalSum type_ii;

    FormalSum total() const { return (type_i + type_ii).normalized(); }
    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;
};

IdentityReport master_identity(const Partition& target, const IdentityOptions& opt = {});

}  // namespace partopus
