#pragma once

#include <map>
#include <optional>
#include <vector>

#include "brokensym/abelian.hpp"
#include "brokensym/poly.hpp"

namespace bsym {

// Degreewise model of (ring in `vars`) / (homogeneous ideal), realized for
// every degree d in [min_degree, max_degree] by integer row reduction of the
// relation lattice span{ g * m : g generator, m monomial }.
//
// With b-variables present (negative degrees) the monomial space is truncated
// at b_weight_cutoff; degrees below -2*b_weight_cutoff are not modeled.
struct QuotientBuild {
    std::vector<VarId> vars;
    std::vector<GradedPoly> gens;
    int max_degree = 0;
    int b_weight_cutoff = 0;
};

class QuotientModule {
public:
    static QuotientModule build(QuotientBuild spec);

    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }
    const std::vector<VarId>& vars() const { return vars_; }
    const std::vector<GradedPoly>& gens() const { return gens_; }

    const std::vector<Monomial>& monomials(int d) const;
    const FgAbGroup& graded_piece(int d) const;
    long graded_rank(int d) const { return graded_piece(d).free_rank; }
    const GroupPresentation& presentation(int d) const;

    // canonical representative modulo the relation lattice (Hermite reduction)
    std::vector<Int> reduce(int d, std::vector<Int> coords) const;
    GradedPoly reduce(const GradedPoly& p) const;

    std::vector<Int> coords_of(const GradedPoly& homogeneous_p, int d) const;
    GradedPoly poly_of(int d, const std::vector<Int>& coords) const;

    long total_rank() const;  // sum of graded free ranks over the window
    bool torsion_free() const;

private:
    std::vector<VarId> vars_;
    std::vector<GradedPoly> gens_;
    int min_degree_ = 0, max_degree_ = 0, b_cutoff_ = 0;

    struct Piece {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t> index;
        // row-style Hermite basis of the relation lattice, sorted by pivot
        std::vector<std::vector<Int>> hermite;
        std::vector<std::size_t> pivots;
        GroupPresentation pres;
    };
    std::map<int, Piece> pieces_;

    const Piece& piece(int d) const;
    friend class QuotientMap;
};

// A degree-homogeneous module map between quotient models, induced by a ring
// substitution on the ambient variables followed by multiplication with a
// fixed homogeneous polynomial. Checked to be well defined on presentations.
class QuotientMap {
public:
    QuotientMap(const QuotientModule* src, const QuotientModule* tgt,
                std::map<VarId, GradedPoly> substitution, GradedPoly multiplier);

    int degree_shift() const { return shift_; }
    GradedPoly apply(const GradedPoly& p) const;
    // matrix from src monomial coordinates at degree d to tgt reduced
    // coordinates at degree d + shift
    IntMatrix matrix(int d) const;

private:
    const QuotientModule* src_;
    const QuotientModule* tgt_;
    std::map<VarId, GradedPoly> sub_;
    GradedPoly mult_;
    int shift_ = 0;
};

}  // namespace bsym
