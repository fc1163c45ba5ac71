#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partopus/formal.hpp"
#include "partopus/partition.hpp"

namespace partopus {

// A partitioned map: a type, a super degree and a body written over
// placeholder generators #0, #1, ... (flattened slot order).
struct PMap {
    std::string label;
    Partition type;
    Parity super;
    FormalSum body;

    int d() const { return type.d(); }
    int dbar() const { return type.dbar(); }
    Graded graded() const { return Graded{d(), dbar(), super}; }
};

PMap symbol_map(const std::string& name, const Partition& type, std::optional<int> super = std::nullopt);
PMap element_map(const std::string& name, std::optional<int> super = std::nullopt);
std::string placeholder(std::size_t k);

using SlotArgs = std::vector<std::vector<Expr>>;

// generators a, b, c, ... laid out along the slots of `type`
SlotArgs default_args(const Partition& type, std::optional<int> super = std::nullopt, std::size_t offset = 0);
std::string generator_name(std::size_t k);

// substitute one formal sum per placeholder of `body`
FormalSum instantiate(const FormalSum& body, const std::vector<FormalSum>& args);
FormalSum apply_map(const PMap& m, const std::vector<FormalSum>& flat_args);

// One target slot inside the block fed by the inner map(s): segment lengths
// around the cores. For a single inner map: {pre, post}.
struct CoreRef {
    int inner;       // which inner map
    int inner_slot;  // which of its slots
    int size;
};

struct SlotSplit {
    int slot;                    // index into the target partition
    std::vector<int> segments;   // cores.size() + 1 lengths
    std::vector<CoreRef> cores;
};

struct Subdivision {
    int outer_slot;            // slot of the outer map receiving the inner map(s)
    int first_target_slot;
    std::vector<SlotSplit> splits;
    std::vector<int> spread;   // the u's distributed over the block
};

std::vector<Subdivision> enumerate_subdivisions(const Partition& target, const Partition& outer,
                                                const std::vector<Partition>& inners);
// every target reachable by putting the inners into one slot of outer, with multiplicity
PartitionVector composition_targets(const Partition& outer, const std::vector<Partition>& inners);
std::vector<Subdivision> enumerate_subdivisions(const Partition& target, const Partition& outer, const Partition& inner);
std::vector<Subdivision> enumerate_subdivisions(const Partition& target, int i, const Partition& inner);

// number of order-preserving merges of strings with the given lengths
std::size_t shuffle_count(const std::vector<int>& lengths);
std::size_t expanded_term_count(const Subdivision& s, int inner_count);

struct CompositionOptions {
    SignRule rule = SignRule::bigraded;
    bool tilde = false;
};

// {x}{y1,...,yk} on the given target, applied to slot arguments
FormalSum compose_component(const PMap& x, const std::vector<PMap>& ys, const Partition& target, const SlotArgs& args,
                            const CompositionOptions& opt = {});
FormalSum compose_component(const PMap& x, const std::vector<PMap>& ys, const Partition& target,
                            const CompositionOptions& opt = {});

// the composite itself as a partitioned map of type `target`
PMap compose_map(const PMap& x, const std::vector<PMap>& ys, const Partition& target, const CompositionOptions& opt = {});

std::map<Partition, FormalSum> compose_pair(const PMap& x, const PMap& y, const CompositionOptions& opt = {});
std::map<Partition, FormalSum> compose_multi(const PMap& x, const std::vector<PMap>& ys, const CompositionOptions& opt = {});
std::map<Partition, PMap> compose_pair_maps(const PMap& x, const PMap& y, const CompositionOptions& opt = {});

// unpartitioned multibrace calculus {x}{group1}...{groupn}
struct ChainSymbol {
    std::string name;
    int arity = 0;                // 0: element
    std::optional<int> super;
};

FormalSum expand_chain(const ChainSymbol& head, const std::vector<std::vector<ChainSymbol>>& groups,
                       const CompositionOptions& opt = {});

}  // namespace partopus
