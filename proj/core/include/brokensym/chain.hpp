#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brokensym/abelian.hpp"
#include "brokensym/intmatrix.hpp"

namespace bsym {

// A bounded cochain complex of labeled free Z-modules; the differential at
// position p maps M[p] -> M[p+1]. Positions outside the stored range are zero.
class ChainComplex {
public:
    void set_module(int p, std::size_t rank, std::vector<std::string> labels = {});
    void set_differential(int p, IntMatrix d);

    std::size_t rank_at(int p) const;
    const std::vector<std::string>& labels_at(int p) const;
    const IntMatrix* differential(int p) const;  // null when zero/out of range
    IntMatrix differential_or_zero(int p) const;

    // d after d must vanish; dimension bookkeeping must be consistent.
    void validate() const;

    int min_pos() const { return p_min_; }
    int max_pos() const { return p_max_; }

private:
    int p_min_ = 0, p_max_ = -1;
    std::map<int, std::pair<std::size_t, std::vector<std::string>>> modules_;
    std::map<int, IntMatrix> diff_;
    static const std::vector<std::string> no_labels_;
};

// Homology at one position, retaining enough data to express chains:
// kernel basis K, and Z^kappa / im(incoming) as a presentation.
class HomologySlot {
public:
    HomologySlot() = default;
    HomologySlot(const IntMatrix& d_in, const IntMatrix& d_out);

    const FgAbGroup& group() const { return pres_.group(); }
    std::size_t gen_count() const { return pres_.gen_count(); }
    const std::vector<Int>& orders() const { return pres_.orders(); }
    std::vector<Int> generator_cycle(std::size_t g) const;  // ambient chain coordinates
    // coordinates of a cycle's class; throws if the vector is not a cycle
    std::vector<Int> express(const std::vector<Int>& cycle) const;
    std::size_t ambient_rank() const { return ambient_; }

private:
    std::size_t ambient_ = 0;
    IntMatrix kernel_;       // columns: basis of ker(d_out)
    LinearSolver ksolver_;   // solves kernel_ * u = z
    GroupPresentation pres_;  // Z^kappa modulo incoming boundaries
};

// Homology of c at position p (both adjacent differentials, when present,
// are taken from the complex; missing ones are zero).
HomologySlot homology(const ChainComplex& c, int p);

// Matrix of the map induced on homology by a chain map f (given at one
// position, in ambient coordinates source -> target). Throws if f sends a
// generator cycle to a non-cycle.
IntMatrix induced_map(const IntMatrix& f, const HomologySlot& src, const HomologySlot& tgt);

}  // namespace bsym
