#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brokensym/chain.hpp"
#include "brokensym/soergel.hpp"

namespace bsym {

// One basis element of the Koszul complex: an exterior monomial in the odd
// generators g_1..g_r (dual-coroot basis), a square-free class monomial, and
// an x-monomial. Cohomological degree |gamma| + 2|delta| + deg(mono);
// exterior degree h = |gamma|.
struct SliceElt {
    std::uint32_t gamma = 0;
    DeltaMask delta = 0;
    Monomial mono;
    std::string label() const;
    bool operator<(const SliceElt& o) const
    {
        if (gamma != o.gamma)
            return gamma < o.gamma;
        if (delta != o.delta)
            return delta < o.delta;
        return mono < o.mono;
    }
    bool operator==(const SliceElt& o) const
    {
        return gamma == o.gamma && delta == o.delta && mono == o.mono;
    }
};

// The Koszul complex computing Hochschild homology of the Bott-Samelson
// bimodule of a positive word: Lambda(g_1..g_r) tensor the bimodule, with
// d(g_m) the hat class of m, extended as an odd derivation. d preserves
// sigma = (cohomological degree) + (exterior degree), so the complex splits
// into finite slices indexed by sigma; homology at (s, h) lives in the slice
// sigma = s + h at exterior position h.
class VertexComplex {
public:
    explicit VertexComplex(BraidWord positive_word);

    const BraidWord& word() const { return word_; }
    const BottSamelson& ring() const { return *bs_; }
    int strands() const { return word_.strands; }
    int length() const { return word_.length(); }

    std::vector<SliceElt> slice_basis(int sigma, int h) const;
    // d : C^(sigma, h) -> C^(sigma, h-1); rows index the target basis
    IntMatrix slice_matrix(int sigma, int h) const;
    HomologySlot slot(int s, int h) const;

    // writes a coefficient element under a fixed exterior monomial into
    // column coordinates over a slice basis (index lookup must succeed)
    std::vector<Int> column_of(const std::vector<SliceElt>& basis, std::uint32_t gamma,
                               const BSElement& coeff) const;

private:
    BraidWord word_;
    std::shared_ptr<const BottSamelson> bs_;
};

// Hochschild homology of the bimodule of a positive word, graded by
// (cohomological degree s, exterior degree h), with named generator classes.
struct HHClassRef {
    int s = 0, h = 0;
    std::vector<Int> chain;  // coordinates in slice_basis(s + h, h)
};

struct HHModule {
    BraidWord word;
    int max_deg = 0;
    std::map<std::pair<int, int>, FgAbGroup> groups;       // (s, h) -> group
    std::map<int, HHClassRef> gamma_classes;               // keyed by min element of the orbit
    std::map<int, HHClassRef> beta_classes;                // keyed by s with nu(s) == 1
    std::map<int, std::vector<int>> gamma_coefficients;    // orbit -> coefficients over g_m

    long rank(int s, int h) const;
    bool torsion_free() const;
};

// keep_slots retains HomologySlot data for expression queries (testing aid)
HHModule hochschild_homology(const BraidWord& positive_word, int max_deg);

// Closed-form (s, h)-graded rank table implied by the redundancy-free
// presentation and the square-free length filtration; used as a test oracle.
std::map<std::pair<int, int>, long> structural_oracle(const BraidWord& positive_word, int max_deg);

// The chain map dropping letter position j (class -> 0, higher letters shift
// down) together with its induced maps on homology for all s <= max_deg.
struct HHRestriction {
    BraidWord from, to;
    int dropped;
    std::map<std::pair<int, int>, IntMatrix> induced;          // (s,h) -> matrix
    std::map<std::pair<int, int>, FgAbGroup> from_groups, to_groups;
};

HHRestriction hh_restriction(const BraidWord& positive_word, int j, int max_deg);

// Chain-level edge maps between Koszul complexes, used by the cube assembly.
// drop: remove letter position q of `from` (delta_q -> 0).
IntMatrix drop_letter_matrix(const VertexComplex& from, const VertexComplex& to, int q, int sigma,
                             int h);
// insert: multiply with the degree-2 insertion class at letter position q of
// `to`; source slice sigma maps to target slice sigma + 2.
IntMatrix insert_letter_matrix(const VertexComplex& from, const VertexComplex& to, int q,
                               int sigma, int h);

}  // namespace bsym
