#include "brokensym/hochschild.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "brokensym/error.hpp"

namespace bsym {

std::string SliceElt::label() const
{
    std::ostringstream os;
    bool any = false;
    for (int m = 0; m < 32; ++m)
        if (gamma & (1u << m)) {
            os << "g" << (m + 1);
            any = true;
        }
    for (int j = 0; j < 32; ++j)
        if (delta & (1u << j)) {
            os << "d" << (j + 1);
            any = true;
        }
    if (!mono.is_one() || !any)
        os << (any ? "*" : "") << mono.to_string();
    return os.str();
}

VertexComplex::VertexComplex(BraidWord positive_word)
    : word_(std::move(positive_word)), bs_(shared_bott_samelson(word_))
{
}

std::vector<SliceElt> VertexComplex::slice_basis(int sigma, int h) const
{
    std::vector<SliceElt> out;
    if (h < 0 || h > strands() || sigma < 0)
        return out;
    const int r = strands();
    const int k = length();
    std::vector<VarId> vars = x_variables(r);
    for (std::uint32_t g = 0; g < (1u << r); ++g) {
        if (std::popcount(g) != h)
            continue;
        for (DeltaMask t = 0; t < (1u << k); ++t) {
            int xdeg = sigma - 2 * h - 2 * std::popcount(t);
            if (xdeg < 0 || xdeg % 2 != 0)
                continue;
            for (const auto& m : monomials_of_degree(vars, xdeg))
                out.push_back({g, t, m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> VertexComplex::column_of(const std::vector<SliceElt>& basis, std::uint32_t gamma,
                                          const BSElement& coeff) const
{
    std::vector<Int> col(basis.size(), Int(0));
    for (const auto& [mask, poly] : coeff.terms())
        for (const auto& [mono, c] : poly.terms()) {
            SliceElt key{gamma, mask, mono};
            auto it = std::lower_bound(basis.begin(), basis.end(), key);
            if (it == basis.end() || !(*it == key) || it->gamma != gamma)
                throw ComputationError("koszul: element escapes the slice basis");
            col[static_cast<std::size_t>(it - basis.begin())] += c;
        }
    return col;
}

IntMatrix VertexComplex::slice_matrix(int sigma, int h) const
{
    std::vector<SliceElt> src = slice_basis(sigma, h);
    std::vector<SliceElt> tgt = slice_basis(sigma, h - 1);
    IntMatrix d(tgt.size(), src.size());

    // local product cache: hat class of m times a square-free monomial
    std::map<std::pair<int, DeltaMask>, BSElement> prod;
    auto hat_times = [&](int m, DeltaMask t) -> const BSElement& {
        auto key = std::make_pair(m, t);
        auto it = prod.find(key);
        if (it == prod.end()) {
            BSElement e = bs_->multiply(bs_->delta_hat(m), BSElement::term(t, GradedPoly::constant(Int(1))));
            it = prod.emplace(key, std::move(e)).first;
        }
        return it->second;
    };

    for (std::size_t j = 0; j < src.size(); ++j) {
        const SliceElt& e = src[j];
        int sign_count = 0;
        for (int m = 1; m <= strands(); ++m) {
            std::uint32_t bit = 1u << (m - 1);
            if (!(e.gamma & bit))
                continue;
            const BSElement& base = hat_times(m, e.delta);
            if (!base.is_zero()) {
                Int sgn = (sign_count % 2 == 0) ? 1 : -1;
                for (const auto& [mask, poly] : base.terms())
                    for (const auto& [mono, c] : poly.terms()) {
                        SliceElt key{e.gamma & ~bit, mask, mono.times(e.mono)};
                        auto it = std::lower_bound(tgt.begin(), tgt.end(), key);
                        if (it == tgt.end() || !(*it == key))
                            throw ComputationError("koszul: differential escapes the slice");
                        d.a[static_cast<std::size_t>(it - tgt.begin())][j] += sgn * c;
                    }
            }
            ++sign_count;
        }
    }
    return d;
}

HomologySlot VertexComplex::slot(int s, int h) const
{
    int sigma = s + h;
    IntMatrix d_out = slice_matrix(sigma, h);
    IntMatrix d_in = slice_matrix(sigma, h + 1);
    return HomologySlot(d_in, d_out);
}

long HHModule::rank(int s, int h) const
{
    auto it = groups.find({s, h});
    return it == groups.end() ? 0 : it->second.free_rank;
}

bool HHModule::torsion_free() const
{
    for (const auto& [k, g] : groups)
        if (!g.torsion.empty())
            return false;
    return true;
}

namespace {

// coefficients of the orbit form sum_{i in l} x_i over the dual-coroot basis;
// entry m (1-based) multiplies g_m. Vanishes on nu(I) when l is an orbit.
std::vector<int> orbit_coefficients(const std::vector<int>& orbit, int r)
{
    std::vector<int> c(r + 1, 0);
    auto in = [&](int i) { return std::find(orbit.begin(), orbit.end(), i) != orbit.end(); };
    for (int m = 1; m < r; ++m)
        c[m] = (in(m) ? 1 : 0) - (in(m + 1) ? 1 : 0);
    c[r] = in(r) ? 1 : 0;
    return c;
}

}  // namespace

HHModule hochschild_homology(const BraidWord& positive_word, int max_deg)
{
    if (max_deg < 4)
        throw ComputationError("hochschild: cutoff too small to contain the named classes");
    HHModule hh;
    hh.word = positive_word;
    hh.max_deg = max_deg;
    VertexComplex vc(positive_word);
    const int r = vc.strands();

    for (int s = 0; s <= max_deg; ++s)
        for (int h = 0; h <= r; ++h) {
            FgAbGroup g = vc.slot(s, h).group();
            if (!g.trivial())
                hh.groups[{s, h}] = std::move(g);
        }

    IndexStats st = index_stats(positive_word);

    // orbit classes: integral combinations of the surviving odd generators
    for (const auto& orbit : st.orbits) {
        auto coeff = orbit_coefficients(orbit, r);
        for (int m : st.nu)
            if (coeff[m] != 0)
                throw ComputationError("internal: orbit class meets a redundant generator");
        auto basis = vc.slice_basis(2, 1);
        std::vector<Int> chain(basis.size(), Int(0));
        for (int m = 1; m <= r; ++m) {
            if (coeff[m] == 0)
                continue;
            SliceElt key{1u << (m - 1), 0, Monomial::one()};
            auto it = std::lower_bound(basis.begin(), basis.end(), key);
            if (it == basis.end() || !(*it == key))
                throw ComputationError("internal: odd generator missing from slice");
            chain[static_cast<std::size_t>(it - basis.begin())] = coeff[m];
        }
        hh.gamma_classes[orbit.front()] = HHClassRef{1, 1, std::move(chain)};
        hh.gamma_coefficients[orbit.front()] = coeff;
    }

    // beta classes where the index occurs exactly once: the cycle
    // g_s (delta_j + alpha_s), corrected by a decomposable term when needed
    for (int s : st.nu) {
        if (st.counts.at(s) != 1)
            continue;
        int j = st.positions.at(s).front();
        auto basis = vc.slice_basis(4, 1);
        std::vector<Int> z0(basis.size(), Int(0));
        BSElement load = BSElement::delta(j) + BSElement::poly(simple_root(s));
        {
            auto col = vc.column_of(basis, 1u << (s - 1), load);
            for (std::size_t i = 0; i < col.size(); ++i)
                z0[i] += col[i];
        }
        IntMatrix d = vc.slice_matrix(4, 1);
        std::vector<Int> dz = d.apply(z0);
        bool zero = std::all_of(dz.begin(), dz.end(), [](const Int& x) { return x == 0; });
        std::vector<Int> beta = z0;
        if (!zero) {
            // solve d(xi) = d(z0) over the decomposable part of the slice
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (basis[i].delta != 0)
                    idx.push_back(i);
            IntMatrix cols(d.rows, 0);
            for (std::size_t c = 0; c < idx.size(); ++c)
                cols.append_column(d.column(idx[c]));
            auto sol = LinearSolver(cols).solve(dz);
            if (!sol)
                throw ComputationError("hochschild: no decomposable correction for the degree-3 class");
            for (std::size_t c = 0; c < idx.size(); ++c)
                beta[idx[c]] -= (*sol)[c];
            auto check = d.apply(beta);
            if (!std::all_of(check.begin(), check.end(), [](const Int& x) { return x == 0; }))
                throw ComputationError("internal: corrected degree-3 class is not a cycle");
        }
        hh.beta_classes[s] = HHClassRef{3, 1, std::move(beta)};
    }
    return hh;
}

std::map<std::pair<int, int>, long> structural_oracle(const BraidWord& positive_word, int max_deg)
{
    IndexStats st = index_stats(positive_word);
    const int r = positive_word.strands;
    const int k = positive_word.length();
    const int nnu = static_cast<int>(st.nu.size());
    const int nbar = static_cast<int>(st.orbits.size());

    // series product over (q-degree <= max_deg, exterior power <= r):
    // 1/(1-q^2)^r * (1+q^3 u)^{|nu|} * (1+q u)^{nbar} * (1+q^2)^{k-|nu|}
    std::vector<std::vector<long>> series(max_deg + 1, std::vector<long>(r + 1, 0));
    series[0][0] = 1;
    auto mul_factor = [&](int qdeg, int upow) {
        std::vector<std::vector<long>> next(max_deg + 1, std::vector<long>(r + 1, 0));
        for (int d = 0; d <= max_deg; ++d)
            for (int u = 0; u <= r; ++u) {
                long v = series[d][u];
                if (v == 0)
                    continue;
                next[d][u] += v;
                if (d + qdeg <= max_deg && u + upow <= r)
                    next[d + qdeg][u + upow] += v;
            }
        series = std::move(next);
    };
    for (int i = 0; i < nnu; ++i)
        mul_factor(3, 1);
    for (int i = 0; i < nbar; ++i)
        mul_factor(1, 1);
    for (int i = 0; i < k - nnu; ++i)
        mul_factor(2, 0);
    // polynomial ring factor: repeatedly multiply by 1/(1-q^2) = sum q^{2m}
    for (int v = 0; v < r; ++v) {
        std::vector<std::vector<long>> next(max_deg + 1, std::vector<long>(r + 1, 0));
        for (int d = 0; d <= max_deg; ++d)
            for (int u = 0; u <= r; ++u) {
                if (series[d][u] == 0)
                    continue;
                for (int m = d; m <= max_deg; m += 2)
                    next[m][u] += series[d][u];
            }
        series = std::move(next);
    }

    std::map<std::pair<int, int>, long> out;
    for (int d = 0; d <= max_deg; ++d)
        for (int u = 0; u <= r; ++u)
            if (series[d][u] != 0)
                out[{d, u}] = series[d][u];
    return out;
}

HHRestriction hh_restriction(const BraidWord& positive_word, int j, int max_deg)
{
    HHRestriction res;
    res.from = positive_word;
    res.dropped = j;
    VertexComplex from(positive_word);
    res.to = from.ring().word_dropping(j);
    VertexComplex to(res.to);

    const int r = positive_word.strands;
    for (int s = 0; s <= max_deg; ++s)
        for (int h = 0; h <= r; ++h) {
            int sigma = s + h;
            IntMatrix f = drop_letter_matrix(from, to, j, sigma, h);
            IntMatrix f_below = drop_letter_matrix(from, to, j, sigma, h - 1);
            if (!(f_below * from.slice_matrix(sigma, h) == to.slice_matrix(sigma, h) * f))
                throw ComputationError("restriction does not commute with the differential");
            HomologySlot src = from.slot(s, h);
            HomologySlot tgt = to.slot(s, h);
            IntMatrix ind = induced_map(f, src, tgt);
            if (!src.group().trivial() || !tgt.group().trivial()) {
                res.from_groups[{s, h}] = src.group();
                res.to_groups[{s, h}] = tgt.group();
                res.induced[{s, h}] = std::move(ind);
            }
        }
    return res;
}

IntMatrix drop_letter_matrix(const VertexComplex& from, const VertexComplex& to, int q, int sigma,
                             int h)
{
    auto src = from.slice_basis(sigma, h);
    auto tgt = to.slice_basis(sigma, h);
    IntMatrix m(tgt.size(), src.size());
    DeltaMask bit = 1u << (q - 1);
    DeltaMask low = bit - 1;
    for (std::size_t j = 0; j < src.size(); ++j) {
        const SliceElt& e = src[j];
        if (e.delta & bit)
            continue;
        SliceElt key{e.gamma, (e.delta & low) | ((e.delta & ~low & ~bit) >> 1), e.mono};
        auto it = std::lower_bound(tgt.begin(), tgt.end(), key);
        if (it == tgt.end() || !(*it == key))
            throw ComputationError("drop map: image escapes the target slice");
        m.a[static_cast<std::size_t>(it - tgt.begin())][j] = 1;
    }
    return m;
}

IntMatrix insert_letter_matrix(const VertexComplex& from, const VertexComplex& to, int q,
                               int sigma, int h)
{
    auto src = from.slice_basis(sigma, h);
    auto tgt = to.slice_basis(sigma + 2, h);
    IntMatrix m(tgt.size(), src.size());
    DeltaMask bit = 1u << (q - 1);
    DeltaMask low = bit - 1;
    BSElement cls = to.ring().insertion_class(q);
    for (std::size_t j = 0; j < src.size(); ++j) {
        const SliceElt& e = src[j];
        DeltaMask up = (e.delta & low) | ((e.delta & ~low) << 1);
        BSElement image =
            to.ring().multiply(BSElement::term(up, GradedPoly::constant(Int(1))), cls);
        for (const auto& [mask, poly] : image.terms())
            for (const auto& [mono, c] : poly.terms()) {
                SliceElt key{e.gamma, mask, mono.times(e.mono)};
                auto it = std::lower_bound(tgt.begin(), tgt.end(), key);
                if (it == tgt.end() || !(*it == key))
                    throw ComputationError("insert map: image escapes the target slice");
                m.a[static_cast<std::size_t>(it - tgt.begin())][j] += c;
            }
    }
    return m;
}

}  // namespace bsym
