#pragma once

#include <map>
#include <string>
#include <vector>

#include "brokensym/ints.hpp"

namespace bsym {

// Variable ids: +i is x_i (degree 2), -i is b_i (degree -2i).
using VarId = int;

inline VarId xvar(int i) { return i; }
inline VarId bvar(int i) { return -i; }
inline int var_degree(VarId v) { return v > 0 ? 2 : 2 * v; }

struct Monomial {
    // sorted by variable id, all exponents > 0
    std::vector<std::pair<VarId, int>> f;

    static Monomial one() { return {}; }
    static Monomial var(VarId v, int e = 1);
    bool is_one() const { return f.empty(); }
    int degree() const;
    int exponent(VarId v) const;
    int b_weight() const;  // sum of i * e over b_i factors
    Monomial times(const Monomial& o) const;
    bool operator<(const Monomial& o) const { return f < o.f; }
    bool operator==(const Monomial& o) const { return f == o.f; }
    std::string to_string() const;  // e.g. x1^2*x2, b2*x1
};

// Exact multivariate polynomial over Z; no zero coefficients are stored.
class GradedPoly {
public:
    GradedPoly() = default;
    static GradedPoly constant(Int c);
    static GradedPoly var(VarId v);
    static GradedPoly x(int i) { return var(xvar(i)); }
    static GradedPoly b(int i) { return var(bvar(i)); }
    static GradedPoly monomial(Monomial m, Int c);

    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }
    const std::map<Monomial, Int>& terms() const { return c_; }
    Int coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Int& c);
    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator-() const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly scaled(const Int& c) const;
    bool operator==(const GradedPoly& o) const { return c_ == o.c_; }

    // grading queries (deg x_i = 2, deg b_i = -2i)
    bool is_homogeneous(int* degree_out = nullptr) const;
    int max_degree() const;  // 0 for the zero polynomial
    GradedPoly homogeneous_part(int d) const;

    // simultaneous substitution; unmapped variables stay fixed
    GradedPoly substitute(const std::map<VarId, GradedPoly>& images) const;
    GradedPoly pow(int e) const;

    std::string to_string() const;  // canonical: degree-descending, then lex

private:
    std::map<Monomial, Int> c_;
};

// <weight, coroot h_u>: x_u pairs to 1, x_{u+1} to -1, others to 0.
// The weight must be homogeneous linear in x-variables.
Int pairing(const GradedPoly& weight, int u);

// Simple-reflection action: the transposition x_s <-> x_{s+1}, extended as a
// ring automorphism. Agrees with w |-> w - <w,h_s> a_s on linear forms.
GradedPoly weyl_action(const GradedPoly& p, int s);

// Exact quotient (p - p[a := b]) / (x_a - x_b) for p polynomial in slot a.
GradedPoly divided_difference(const GradedPoly& p, VarId a, VarId b);

// Exact division by (x_a - x_b); throws if not divisible.
GradedPoly divide_by_difference(const GradedPoly& p, VarId a, VarId b);

GradedPoly simple_root(int s);             // x_s - x_{s+1}
GradedPoly dual_coroot_weight(int m);      // h_m^* = x_1 + ... + x_m
GradedPoly elementary_symmetric(int r, int m);

// Truncated power series sum_i b_i x^i in the given slot, i = 1..n_terms.
GradedPoly twist_series(VarId slot, int n_terms);

// All monomials over `vars` of graded degree `degree`, with total b-weight
// at most b_weight_cutoff. Sorted.
std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int degree,
                                          int b_weight_cutoff = 0);

// x_1 .. x_r
std::vector<VarId> x_variables(int r);

}  // namespace bsym
