#include "brokensym/poly.hpp"

#include <algorithm>
#include <sstream>

#include "brokensym/error.hpp"

namespace bsym {

Monomial Monomial::var(VarId v, int e)
{
    Monomial m;
    if (e != 0)
        m.f.emplace_back(v, e);
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& [v, e] : f)
        d += var_degree(v) * e;
    return d;
}

int Monomial::exponent(VarId v) const
{
    for (const auto& [w, e] : f)
        if (w == v)
            return e;
    return 0;
}

int Monomial::b_weight() const
{
    int w = 0;
    for (const auto& [v, e] : f)
        if (v < 0)
            w += -v * e;
    return w;
}

Monomial Monomial::times(const Monomial& o) const
{
    Monomial r;
    r.f.reserve(f.size() + o.f.size());
    auto i = f.begin();
    auto j = o.f.begin();
    while (i != f.end() && j != o.f.end()) {
        if (i->first < j->first)
            r.f.push_back(*i++);
        else if (j->first < i->first)
            r.f.push_back(*j++);
        else {
            r.f.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    r.f.insert(r.f.end(), i, f.end());
    r.f.insert(r.f.end(), j, o.f.end());
    return r;
}

std::string Monomial::to_string() const
{
    if (f.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : f) {
        if (!first)
            os << "*";
        first = false;
        os << (v > 0 ? "x" : "b") << (v > 0 ? v : -v);
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

GradedPoly GradedPoly::constant(Int c)
{
    GradedPoly p;
    if (c != 0)
        p.c_[Monomial::one()] = std::move(c);
    return p;
}

GradedPoly GradedPoly::var(VarId v)
{
    GradedPoly p;
    p.c_[Monomial::var(v)] = 1;
    return p;
}

GradedPoly GradedPoly::monomial(Monomial m, Int c)
{
    GradedPoly p;
    if (c != 0)
        p.c_[std::move(m)] = std::move(c);
    return p;
}

Int GradedPoly::coefficient(const Monomial& m) const
{
    auto it = c_.find(m);
    return it == c_.end() ? Int(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Int& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = c_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            c_.erase(it);
    }
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const
{
    GradedPoly r = *this;
    r += o;
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o)
{
    for (const auto& [m, c] : o.c_)
        add_term(m, c);
    return *this;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const
{
    GradedPoly r = *this;
    r -= o;
    return r;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o)
{
    for (const auto& [m, c] : o.c_)
        add_term(m, -c);
    return *this;
}

GradedPoly GradedPoly::operator-() const
{
    GradedPoly r;
    for (const auto& [m, c] : c_)
        r.c_[m] = -c;
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const
{
    GradedPoly r;
    for (const auto& [m1, c1] : c_)
        for (const auto& [m2, c2] : o.c_)
            r.add_term(m1.times(m2), c1 * c2);
    return r;
}

GradedPoly GradedPoly::scaled(const Int& c) const
{
    GradedPoly r;
    if (c == 0)
        return r;
    for (const auto& [m, x] : c_)
        r.c_[m] = x * c;
    return r;
}

bool GradedPoly::is_homogeneous(int* degree_out) const
{
    if (c_.empty()) {
        if (degree_out)
            *degree_out = 0;
        return true;
    }
    int d = c_.begin()->first.degree();
    for (const auto& [m, c] : c_)
        if (m.degree() != d)
            return false;
    if (degree_out)
        *degree_out = d;
    return true;
}

int GradedPoly::max_degree() const
{
    int d = 0;
    for (const auto& [m, c] : c_)
        d = std::max(d, m.degree());
    return d;
}

GradedPoly GradedPoly::homogeneous_part(int d) const
{
    GradedPoly r;
    for (const auto& [m, c] : c_)
        if (m.degree() == d)
            r.c_[m] = c;
    return r;
}

GradedPoly GradedPoly::substitute(const std::map<VarId, GradedPoly>& images) const
{
    GradedPoly r;
    for (const auto& [m, c] : c_) {
        GradedPoly term = GradedPoly::constant(c);
        for (const auto& [v, e] : m.f) {
            auto it = images.find(v);
            if (it == images.end())
                term = term * GradedPoly::monomial(Monomial::var(v, e), Int(1));
            else
                term = term * it->second.pow(e);
        }
        r += term;
    }
    return r;
}

GradedPoly GradedPoly::pow(int e) const
{
    GradedPoly r = GradedPoly::constant(Int(1));
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

std::string GradedPoly::to_string() const
{
    if (c_.empty())
        return "0";
    // degree-descending, then lexicographic on the monomial key
    std::vector<const std::pair<const Monomial, Int>*> terms;
    for (const auto& t : c_)
        terms.push_back(&t);
    std::stable_sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        int da = a->first.degree(), db = b->first.degree();
        if (da != db)
            return da > db;
        return a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : terms) {
        const Int& c = t->second;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = abs_int(c);
        if (ac != 1 || t->first.is_one()) {
            os << ac;
            if (!t->first.is_one())
                os << "*";
        }
        if (!t->first.is_one())
            os << t->first.to_string();
        first = false;
    }
    return os.str();
}

Int pairing(const GradedPoly& weight, int u)
{
    Int r = 0;
    for (const auto& [m, c] : weight.terms()) {
        if (m.f.size() != 1 || m.f[0].second != 1 || m.f[0].first <= 0)
            throw ComputationError("pairing: weight must be linear in x-variables");
        int i = m.f[0].first;
        if (i == u)
            r += c;
        else if (i == u + 1)
            r -= c;
    }
    return r;
}

GradedPoly weyl_action(const GradedPoly& p, int s)
{
    GradedPoly r;
    for (const auto& [m, c] : p.terms()) {
        Monomial n = m;
        for (auto& [v, e] : n.f) {
            if (v == s)
                v = s + 1;
            else if (v == s + 1)
                v = s;
        }
        std::sort(n.f.begin(), n.f.end());
        r.add_term(n, c);
    }
    return r;
}

GradedPoly divide_by_difference(const GradedPoly& p, VarId a, VarId b)
{
    // synthetic division by (x_a - x_b): cancel the highest x_a-power each step
    GradedPoly rem = p;
    GradedPoly quot;
    for (;;) {
        int top = 0;
        for (const auto& [m, c] : rem.terms())
            top = std::max(top, m.exponent(a));
        if (top == 0)
            break;
        GradedPoly lead;
        for (const auto& [m, c] : rem.terms()) {
            if (m.exponent(a) != top)
                continue;
            Monomial n;
            for (const auto& [v, e] : m.f)
                if (v != a)
                    n.f.emplace_back(v, e);
                else if (e > 1)
                    n.f.emplace_back(v, e - 1);
            std::sort(n.f.begin(), n.f.end());
            lead.add_term(n, c);
        }
        quot += lead;
        GradedPoly diff = GradedPoly::var(a) - GradedPoly::var(b);
        rem -= lead * diff;
    }
    if (!rem.is_zero())
        throw ComputationError("divide_by_difference: inexact division");
    return quot;
}

GradedPoly divided_difference(const GradedPoly& p, VarId a, VarId b)
{
    std::map<VarId, GradedPoly> sub{{a, GradedPoly::var(b)}};
    GradedPoly diff = p - p.substitute(sub);
    return divide_by_difference(diff, a, b);
}

GradedPoly simple_root(int s)
{
    return GradedPoly::x(s) - GradedPoly::x(s + 1);
}

GradedPoly dual_coroot_weight(int m)
{
    GradedPoly r;
    for (int i = 1; i <= m; ++i)
        r += GradedPoly::x(i);
    return r;
}

GradedPoly elementary_symmetric(int r, int m)
{
    // e_m(x_1..x_r) by iterating over m-subsets
    GradedPoly out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i)
        idx[i] = i + 1;
    if (m == 0)
        return GradedPoly::constant(Int(1));
    if (m > r)
        return out;
    for (;;) {
        Monomial mono;
        for (int i : idx)
            mono.f.emplace_back(xvar(i), 1);
        out.add_term(mono, Int(1));
        int j = m - 1;
        while (j >= 0 && idx[j] == r - (m - 1 - j))
            --j;
        if (j < 0)
            break;
        ++idx[j];
        for (int t = j + 1; t < m; ++t)
            idx[t] = idx[t - 1] + 1;
    }
    return out;
}

GradedPoly twist_series(VarId slot, int n_terms)
{
    GradedPoly r;
    for (int i = 1; i <= n_terms; ++i)
        r += GradedPoly::b(i) * GradedPoly::monomial(Monomial::var(slot, i), Int(1));
    return r;
}

namespace {

void enumerate_monomials(const std::vector<VarId>& vars, std::size_t i, int remaining_deg,
                         int b_budget, Monomial& acc, std::vector<Monomial>& out)
{
    if (i == vars.size()) {
        if (remaining_deg == 0)
            out.push_back(acc);
        return;
    }
    VarId v = vars[i];
    int dv = var_degree(v);
    int emax = dv > 0 ? (remaining_deg >= 0 ? remaining_deg / dv : -1) : b_budget / (-dv / 2);
    for (int e = 0; e <= emax; ++e) {
        if (e > 0)
            acc.f.emplace_back(v, e);
        int nb = dv < 0 ? b_budget - e * (-dv / 2) : b_budget;
        enumerate_monomials(vars, i + 1, remaining_deg - e * dv, nb, acc, out);
        if (e > 0)
            acc.f.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int degree,
                                          int b_weight_cutoff)
{
    std::vector<VarId> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    std::vector<Monomial> out;
    Monomial acc;
    enumerate_monomials(sorted_vars, 0, degree, b_weight_cutoff, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VarId> x_variables(int r)
{
    std::vector<VarId> v;
    for (int i = 1; i <= r; ++i)
        v.push_back(xvar(i));
    return v;
}

}  // namespace bsym
