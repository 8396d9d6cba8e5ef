#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brokensym/intmatrix.hpp"

namespace bsym {

// Isomorphism type of a finitely generated abelian group:
// Z^free_rank + Z/d_1 + ... with d_1 | d_2 | ..., every d_i > 1.
struct FgAbGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }
    bool operator==(const FgAbGroup& o) const = default;
    std::string to_string() const;
};

// The quotient Z^n / colspan(relations), with generator bookkeeping:
// generators are ordered torsion-first (ascending divisibility), then free.
// express() writes any ambient vector in generator coordinates; torsion
// coordinates are reduced to [0, order).
class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(std::size_t ambient_rank, const IntMatrix& relations);

    const FgAbGroup& group() const { return group_; }
    std::size_t ambient_rank() const { return n_; }
    std::size_t gen_count() const { return gen_rows_.size(); }
    const Int& order(std::size_t g) const { return orders_[g]; }  // 0 means free
    const std::vector<Int>& orders() const { return orders_; }
    std::vector<Int> generator(std::size_t g) const;  // ambient coordinates
    std::vector<Int> express(const std::vector<Int>& ambient) const;
    bool is_zero_class(const std::vector<Int>& ambient) const;

private:
    std::size_t n_ = 0;
    FgAbGroup group_;
    IntMatrix U_, U_inv_;
    std::vector<Int> diag_;
    std::vector<std::size_t> gen_rows_;  // row of U / column of U_inv per generator
    std::vector<Int> orders_;
};

// Morphism sanity: order(src gen) * (matrix column) must vanish in the target.
bool fgab_morphism_well_defined(const std::vector<Int>& src_orders,
                                const std::vector<Int>& tgt_orders, const IntMatrix& m);

// A bounded complex of presented groups: maps[i] : node i -> node i+1,
// written in generator coordinates. orders[i][g] == 0 marks a free generator.
struct FgAbComplex {
    std::vector<std::vector<Int>> orders;
    std::vector<IntMatrix> maps;  // size = nodes - 1
};

// Homology at every node, by presentation stacking and Smith reduction.
// Throws ComputationError naming the offending generator if a composite of
// consecutive maps fails to vanish.
std::vector<FgAbGroup> fgab_homology(const FgAbComplex& c);

}  // namespace bsym
