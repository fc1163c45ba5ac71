#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace partopus {

// Ordered partition (i1|...|ir); slots may be zero.
class Partition {
public:
    Partition() : slots_{1} {}
    explicit Partition(std::vector<int> slots);
    Partition(std::initializer_list<int> slots) : Partition(std::vector<int>(slots)) {}

    const std::vector<int>& slots() const { return slots_; }
    int operator[](std::size_t k) const { return slots_[k]; }
    std::size_t size() const { return slots_.size(); }

    int total() const;
    int d() const { return total() - 1; }
    int dbar() const { return static_cast<int>(slots_.size()) - 1; }
    bool regular() const;

    std::string str() const;
    static Partition parse(std::string_view text);

    bool operator==(const Partition& o) const = default;
    // canonical order: d, then dbar, then lexicographic
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<int> slots_;
};

inline int d_degree(const Partition& p) { return p.d(); }
inline int dbar_degree(const Partition& p) { return p.dbar(); }

enum class Form { reduced, raw };

class PartitionVector {
public:
    using Map = std::map<Partition, std::int64_t>;

    PartitionVector() = default;
    explicit PartitionVector(Form f) : form_(f) {}
    PartitionVector(std::initializer_list<Partition> ps);

    void add(const Partition& p, std::int64_t c = 1);
    std::int64_t coeff(const Partition& p) const;
    const Map& terms() const { return terms_; }
    std::vector<Partition> support() const;
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Form form() const { return form_; }
    bool contains(const Partition& p) const { return terms_.count(p) != 0; }

    // every nonzero coefficient replaced by its sign
    PartitionVector reduced() const;

    PartitionVector& operator+=(const PartitionVector& o);
    PartitionVector& operator-=(const PartitionVector& o);
    PartitionVector operator+(const PartitionVector& o) const;
    PartitionVector operator-(const PartitionVector& o) const;
    PartitionVector operator*(std::int64_t k) const;
    bool operator==(const PartitionVector& o) const { return terms_ == o.terms_; }

    std::string str() const;
    static PartitionVector parse(std::string_view text);
    nlohmann::json to_json() const;
    static PartitionVector from_json(const nlohmann::json& j);

private:
    Map terms_;
    Form form_ = Form::reduced;
};

// all nonnegative compositions of total into parts pieces
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> compositions(int total, int parts);

// every partition with the given degrees; zero slots only if allow_zero
std::vector<Partition> partitions_with(int d, int dbar, bool allow_zero);
std::vector<Partition> regular_partitions_up_to(int max_d);

PartitionVector star_simple(int i, const Partition& q);
PartitionVector star_raw(const Partition& p, const Partition& q);
PartitionVector star(const Partition& p, const Partition& q);
// bilinear extension, then reduced again
PartitionVector star(const PartitionVector& p, const PartitionVector& q);

// N(1|l1|...|lt){head | groups}
PartitionVector higher_product(const Partition& shape, const Partition& head,
                               const std::vector<std::vector<Partition>>& groups);

PartitionVector pre_lie_defect(const PartitionVector& p1, const PartitionVector& p2, const PartitionVector& p3);
PartitionVector pre_lie_defect(const Partition& p1, const Partition& p2, const Partition& p3);
PartitionVector bracket(const PartitionVector& p, const PartitionVector& q);
PartitionVector bracket(const Partition& p, const Partition& q);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace partopus
