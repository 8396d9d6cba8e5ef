#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brokensym/braid.hpp"
#include "brokensym/poly.hpp"

namespace bsym {

// Bit j-1 set means the square-free monomial contains the Schubert class
// attached to the j-th letter.
using DeltaMask = std::uint32_t;

// Normal form of an element of the Bott-Samelson ring: a free left module
// over Z[x_1..x_r] on square-free monomials in the degree-2 classes.
class BSElement {
public:
    BSElement() = default;
    static BSElement poly(GradedPoly p);
    static BSElement delta(int j);  // the class at letter position j (1-based)
    static BSElement term(DeltaMask mask, GradedPoly coeff);

    bool is_zero() const { return t_.empty(); }
    const std::map<DeltaMask, GradedPoly>& terms() const { return t_; }
    GradedPoly coefficient(DeltaMask mask) const;

    void add_term(DeltaMask mask, const GradedPoly& c);
    BSElement operator+(const BSElement& o) const;
    BSElement operator-(const BSElement& o) const;
    BSElement operator-() const;
    BSElement& operator+=(const BSElement& o);
    BSElement scaled_by(const GradedPoly& p) const;  // left action
    bool operator==(const BSElement& o) const { return t_ == o.t_; }

    bool is_homogeneous(int* degree_out = nullptr) const;  // deg delta_j = 2
    std::string to_string() const;  // sorted subsets, then coefficient form

private:
    std::map<DeltaMask, GradedPoly> t_;
};

// The Bott-Samelson bimodule of a positive braid word, presented as
// Z[x_1..x_r][d_1..d_k] / < d_j^2 + [a_{s_j}]_j d_j > with the bracket
// recursion [w]_j = w + sum_{t<j} <w, h_{s_t}> d_t for linear weights w.
class BottSamelson {
public:
    explicit BottSamelson(BraidWord positive_word);

    const BraidWord& word() const { return word_; }
    int strands() const { return word_.strands; }
    int length() const { return word_.length(); }
    int letter(int j) const { return word_.letters[j - 1].index; }  // 1-based

    // bracket table entries
    const BSElement& alpha_bracket(int j) const;                       // [a_{s_j}]_j
    BSElement weight_bracket(const GradedPoly& linear, int j) const;   // [w]_j, j in [1, k+1]
    BSElement x_bracket(int i, int j) const;                           // [x_i]_j
    BSElement delta_hat(int s) const;       // sum of delta_j over positions with letter s
    BSElement insertion_class(int j) const;  // [a_{s_j}]_j + delta_j

    // ring structure on normal forms
    BSElement multiply(const BSElement& a, const BSElement& b) const;
    BSElement right_action(const BSElement& a, const GradedPoly& x_poly) const;
    // image under dropping letter position j: delta_j -> 0, higher indices
    // shift down; the result lives in the bimodule of the dropped word
    BSElement restrict(const BSElement& a, int j) const;
    BraidWord word_dropping(int j) const;

    // graded rank of the normal-form basis at one degree
    long graded_rank(int degree) const;

private:
    BraidWord word_;
    std::vector<BSElement> alpha_;  // [a_{s_j}]_j, 1-based
    BSElement multiply_masks(DeltaMask s, DeltaMask t) const;
};

std::shared_ptr<const BottSamelson> shared_bott_samelson(const BraidWord& positive_word);

struct TensorCheckReport {
    bool ok = true;
    std::string detail;
};

// Degreewise rank comparison against the k-fold tensor model (each letter a
// free factor of rank two), plus the bimodule identities on generators:
// commuting left/right actions, multiplicativity, invariance of symmetric
// polynomials, and the hat-class relation for every occurring index.
TensorCheckReport bimodule_tensor_check(const BraidWord& positive_word, int max_deg);

}  // namespace bsym
