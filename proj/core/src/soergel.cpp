#include "brokensym/soergel.hpp"

#include <bit>
#include <mutex>
#include <sstream>

#include "brokensym/error.hpp"

namespace bsym {

BSElement BSElement::poly(GradedPoly p)
{
    BSElement e;
    if (!p.is_zero())
        e.t_[0] = std::move(p);
    return e;
}

BSElement BSElement::delta(int j)
{
    BSElement e;
    e.t_[1u << (j - 1)] = GradedPoly::constant(Int(1));
    return e;
}

BSElement BSElement::term(DeltaMask mask, GradedPoly coeff)
{
    BSElement e;
    if (!coeff.is_zero())
        e.t_[mask] = std::move(coeff);
    return e;
}

GradedPoly BSElement::coefficient(DeltaMask mask) const
{
    auto it = t_.find(mask);
    return it == t_.end() ? GradedPoly() : it->second;
}

void BSElement::add_term(DeltaMask mask, const GradedPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = t_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

BSElement BSElement::operator+(const BSElement& o) const
{
    BSElement r = *this;
    r += o;
    return r;
}

BSElement& BSElement::operator+=(const BSElement& o)
{
    for (const auto& [m, c] : o.t_)
        add_term(m, c);
    return *this;
}

BSElement BSElement::operator-(const BSElement& o) const
{
    BSElement r = *this;
    for (const auto& [m, c] : o.t_)
        r.add_term(m, -c);
    return r;
}

BSElement BSElement::operator-() const
{
    BSElement r;
    for (const auto& [m, c] : t_)
        r.t_[m] = -c;
    return r;
}

BSElement BSElement::scaled_by(const GradedPoly& p) const
{
    BSElement r;
    if (p.is_zero())
        return r;
    for (const auto& [m, c] : t_) {
        GradedPoly prod = c * p;
        if (!prod.is_zero())
            r.t_[m] = std::move(prod);
    }
    return r;
}

bool BSElement::is_homogeneous(int* degree_out) const
{
    if (t_.empty()) {
        if (degree_out)
            *degree_out = 0;
        return true;
    }
    bool have = false;
    int deg = 0;
    for (const auto& [m, c] : t_) {
        int base = 2 * std::popcount(m);
        int cd = 0;
        if (!c.is_homogeneous(&cd))
            return false;
        if (!have) {
            deg = base + cd;
            have = true;
        } else if (deg != base + cd) {
            return false;
        }
    }
    if (degree_out)
        *degree_out = deg;
    return true;
}

std::string BSElement::to_string() const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int j = 0; j < 32; ++j)
            if (m & (1u << j))
                os << "*d" << (j + 1);
    }
    return os.str();
}

BottSamelson::BottSamelson(BraidWord positive_word) : word_(std::move(positive_word))
{
    if (!word_.positive())
        throw ComputationError("Bott-Samelson ring requires a positive word");
    alpha_.resize(word_.length() + 1);
    for (int j = 1; j <= word_.length(); ++j)
        alpha_[j] = weight_bracket(simple_root(letter(j)), j);
}

BSElement BottSamelson::weight_bracket(const GradedPoly& linear, int j) const
{
    // [w]_j = w + sum_{t<j} <w, h_{s_t}> delta_t
    BSElement e = BSElement::poly(linear);
    for (int t = 1; t < j; ++t) {
        Int c = pairing(linear, letter(t));
        if (c != 0)
            e.add_term(1u << (t - 1), GradedPoly::constant(c));
    }
    return e;
}

const BSElement& BottSamelson::alpha_bracket(int j) const
{
    return alpha_[j];
}

BSElement BottSamelson::x_bracket(int i, int j) const
{
    return weight_bracket(GradedPoly::x(i), j);
}

BSElement BottSamelson::delta_hat(int s) const
{
    BSElement e;
    for (int j = 1; j <= length(); ++j)
        if (letter(j) == s)
            e.add_term(1u << (j - 1), GradedPoly::constant(Int(1)));
    return e;
}

BSElement BottSamelson::insertion_class(int j) const
{
    BSElement e = alpha_[j];
    e.add_term(1u << (j - 1), GradedPoly::constant(Int(1)));
    return e;
}

// delta_S * delta_T with the square rewriting d_j^2 = -[a]_j d_j applied to
// the largest repeated index first; [a]_j only involves earlier classes, so
// the recursion pushes indices strictly down and terminates.
BSElement BottSamelson::multiply_masks(DeltaMask s, DeltaMask t) const
{
    DeltaMask overlap = s & t;
    if (overlap == 0)
        return BSElement::term(s | t, GradedPoly::constant(Int(1)));
    int j = std::bit_width(overlap);  // largest colliding position (1-based)
    DeltaMask bit = 1u << (j - 1);
    BSElement rest = multiply_masks(s & ~bit, t & ~bit);
    BSElement scaled = multiply(rest, alpha_[j]);
    BSElement shifted;
    for (const auto& [m, c] : scaled.terms()) {
        if (m & bit)
            throw ComputationError("internal: rewriting reintroduced a reduced class");
        shifted.add_term(m | bit, c);
    }
    return -shifted;
}

BSElement BottSamelson::multiply(const BSElement& a, const BSElement& b) const
{
    BSElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            GradedPoly c = ca * cb;
            if (c.is_zero())
                continue;
            r += multiply_masks(ma, mb).scaled_by(c);
        }
    return r;
}

BSElement BottSamelson::right_action(const BSElement& a, const GradedPoly& x_poly) const
{
    BSElement image;  // tau^*(x_poly) in normal form
    for (const auto& [m, c] : x_poly.terms()) {
        BSElement term = BSElement::poly(GradedPoly::constant(c));
        for (const auto& [v, e] : m.f) {
            if (v < 0)
                throw ComputationError("right action is defined on x-variables only");
            BSElement xb = x_bracket(v, length() + 1);
            for (int rep = 0; rep < e; ++rep)
                term = multiply(term, xb);
        }
        image += term;
    }
    return multiply(a, image);
}

BSElement BottSamelson::restrict(const BSElement& a, int j) const
{
    DeltaMask bit = 1u << (j - 1);
    DeltaMask low = bit - 1;
    BSElement r;
    for (const auto& [m, c] : a.terms()) {
        if (m & bit)
            continue;  // delta_j goes to zero
        DeltaMask reindexed = (m & low) | ((m & ~low & ~bit) >> 1);
        r.add_term(reindexed, c);
    }
    return r;
}

BraidWord BottSamelson::word_dropping(int j) const
{
    BraidWord w;
    w.strands = word_.strands;
    for (int t = 1; t <= length(); ++t)
        if (t != j)
            w.letters.push_back(word_.letters[t - 1]);
    return w;
}

long BottSamelson::graded_rank(int degree) const
{
    if (degree < 0 || degree % 2 != 0)
        return 0;
    // rank of Z[x_1..x_r] in degree 2m is C(m + r - 1, r - 1); sum over the
    // 2^k square-free monomials
    long total = 0;
    const int r = strands();
    auto poly_rank = [&](int m) -> long {
        if (m < 0)
            return 0;
        long num = 1, den = 1;
        for (int i = 1; i < r; ++i) {
            num *= m + i;
            den *= i;
        }
        return num / den;
    };
    for (DeltaMask mask = 0; mask < (1u << length()); ++mask)
        total += poly_rank(degree / 2 - std::popcount(mask));
    return total;
}

namespace {
std::mutex bs_cache_mutex;
std::map<std::string, std::shared_ptr<const BottSamelson>> bs_cache;
}  // namespace

std::shared_ptr<const BottSamelson> shared_bott_samelson(const BraidWord& positive_word)
{
    std::scoped_lock lock(bs_cache_mutex);
    auto key = positive_word.format();
    auto it = bs_cache.find(key);
    if (it != bs_cache.end())
        return it->second;
    auto ptr = std::make_shared<const BottSamelson>(positive_word);
    bs_cache[key] = ptr;
    return ptr;
}

TensorCheckReport bimodule_tensor_check(const BraidWord& positive_word, int max_deg)
{
    TensorCheckReport rep;
    std::ostringstream diff;
    BottSamelson bs(positive_word);
    const int r = bs.strands();
    const int k = bs.length();

    // graded rank of the tensor-product model: (1+q^2)^k * series(Z[x_1..x_r])
    for (int d = 0; d <= max_deg; d += 2) {
        long model = 0;
        auto poly_rank = [&](int m) -> long {
            if (m < 0)
                return 0;
            long num = 1, den = 1;
            for (int i = 1; i < r; ++i) {
                num *= m + i;
                den *= i;
            }
            return num / den;
        };
        for (int j = 0; j <= k; ++j) {
            long binom = 1;
            for (int t = 0; t < j; ++t)
                binom = binom * (k - t) / (t + 1);
            model += binom * poly_rank(d / 2 - j);
        }
        if (model != bs.graded_rank(d)) {
            rep.ok = false;
            diff << "rank mismatch at degree " << d << ": normal form " << bs.graded_rank(d)
                 << " vs tensor model " << model << "\n";
        }
    }

    // right action must be a ring map on the generators
    for (int i = 1; i <= r; ++i)
        for (int i2 = i; i2 <= r; ++i2) {
            BSElement lhs = bs.right_action(BSElement::poly(GradedPoly::constant(Int(1))),
                                            GradedPoly::x(i) * GradedPoly::x(i2));
            BSElement rhs = bs.right_action(
                bs.right_action(BSElement::poly(GradedPoly::constant(Int(1))), GradedPoly::x(i)),
                GradedPoly::x(i2));
            if (!(lhs == rhs)) {
                rep.ok = false;
                diff << "right action not multiplicative on x" << i << "*x" << i2 << "\n";
            }
        }

    // left and right actions commute
    for (int i = 1; i <= r; ++i) {
        BSElement one = BSElement::poly(GradedPoly::constant(Int(1)));
        BSElement via_right = bs.right_action(one, GradedPoly::x(i)).scaled_by(GradedPoly::x(1));
        BSElement via_left = bs.right_action(one.scaled_by(GradedPoly::x(1)), GradedPoly::x(i));
        if (!(via_right == via_left)) {
            rep.ok = false;
            diff << "left/right actions do not commute on x" << i << "\n";
        }
    }

    // symmetric polynomials act identically on both sides
    for (int m = 1; m <= r; ++m) {
        GradedPoly e = elementary_symmetric(r, m);
        BSElement one = BSElement::poly(GradedPoly::constant(Int(1)));
        if (!(bs.right_action(one, e) == BSElement::poly(e))) {
            rep.ok = false;
            diff << "elementary symmetric e_" << m << " fails central invariance\n";
        }
    }

    // right minus left action of h_s^* is the hat class of s
    IndexStats st = index_stats(positive_word);
    for (int s : st.nu) {
        BSElement one = BSElement::poly(GradedPoly::constant(Int(1)));
        GradedPoly h = dual_coroot_weight(s);
        BSElement delta = bs.right_action(one, h) - BSElement::poly(h);
        if (!(delta == bs.delta_hat(s))) {
            rep.ok = false;
            diff << "hat-class relation fails for index " << s << "\n";
        }
    }

    rep.detail = diff.str();
    return rep;
}

}  // namespace bsym
