#include "brokensym/quotient.hpp"

#include <algorithm>

#include "brokensym/error.hpp"
#include "brokensym/parallel.hpp"

namespace bsym {

namespace {

// integer row echelon (Hermite-style): returns rows sorted by pivot column
void hermite_rows(std::vector<std::vector<Int>>& rows, std::vector<std::size_t>& pivots)
{
    pivots.clear();
    if (rows.empty())
        return;
    const std::size_t n = rows[0].size();
    std::size_t r0 = 0;
    for (std::size_t col = 0; col < n && r0 < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r0; i < rows.size(); ++i) {
                if (rows[i][col] == 0)
                    continue;
                if (best == rows.size() || abs_int(rows[i][col]) < abs_int(rows[best][col]))
                    best = i;
            }
            if (best == rows.size())
                break;
            std::swap(rows[r0], rows[best]);
            bool clean = true;
            for (std::size_t i = r0 + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0)
                    continue;
                Int q = rounded_div(rows[i][col], rows[r0][col]);
                for (std::size_t j = col; j < n; ++j)
                    if (rows[r0][j] != 0)
                        rows[i][j] -= q * rows[r0][j];
                if (rows[i][col] != 0)
                    clean = false;
            }
            if (clean) {
                if (rows[r0][col] < 0)
                    for (auto& x : rows[r0])
                        x = -x;
                pivots.push_back(col);
                ++r0;
                break;
            }
        }
    }
    rows.resize(r0);
    // reduce entries above pivots for canonical representatives
    for (std::size_t i = r0; i-- > 0;) {
        for (std::size_t i2 = 0; i2 < i; ++i2) {
            const Int& p = rows[i][pivots[i]];
            Int q = floor_div(rows[i2][pivots[i]], p);
            if (q != 0)
                for (std::size_t j = pivots[i]; j < n; ++j)
                    if (rows[i][j] != 0)
                        rows[i2][j] -= q * rows[i][j];
        }
    }
}

}  // namespace

QuotientModule QuotientModule::build(QuotientBuild spec)
{
    QuotientModule q;
    q.vars_ = spec.vars;
    q.gens_ = spec.gens;
    q.max_degree_ = spec.max_degree;
    q.b_cutoff_ = spec.b_weight_cutoff;
    q.min_degree_ = spec.b_weight_cutoff > 0 ? -2 * spec.b_weight_cutoff : 0;

    std::vector<int> gen_degrees;
    for (const auto& g : q.gens_) {
        int d = 0;
        if (!g.is_homogeneous(&d))
            throw UsageError("quotient: ideal generators must be homogeneous");
        if (g.is_zero())
            throw UsageError("quotient: zero ideal generator");
        if (d > q.max_degree_)
            throw UsageError("quotient: cutoff " + std::to_string(q.max_degree_) +
                             " is below generator degree " + std::to_string(d));
        gen_degrees.push_back(d);
    }

    std::vector<int> degrees;
    for (int d = q.min_degree_; d <= q.max_degree_; ++d)
        degrees.push_back(d);
    std::vector<Piece> built(degrees.size());

    parallel_for(degrees.size(), [&](std::size_t di) {
        int d = degrees[di];
        Piece& piece = built[di];
        piece.monomials = monomials_of_degree(q.vars_, d, q.b_cutoff_);
        for (std::size_t i = 0; i < piece.monomials.size(); ++i)
            piece.index[piece.monomials[i]] = i;
        const std::size_t n = piece.monomials.size();

        std::vector<std::vector<Int>> rows;
        for (std::size_t gi = 0; gi < q.gens_.size(); ++gi) {
            for (const auto& m : monomials_of_degree(q.vars_, d - gen_degrees[gi], q.b_cutoff_)) {
                std::vector<Int> row(n, Int(0));
                bool in_window = true;
                for (const auto& [gm, c] : q.gens_[gi].terms()) {
                    Monomial prod = gm.times(m);
                    auto it = piece.index.find(prod);
                    if (it == piece.index.end()) {
                        // product escapes the truncated monomial window
                        in_window = false;
                        break;
                    }
                    row[it->second] += c;
                }
                if (in_window)
                    rows.push_back(std::move(row));
            }
        }

        IntMatrix rel(n, 0);
        for (const auto& row : rows)
            rel.append_column(row);
        piece.pres = GroupPresentation(n, rel);
        hermite_rows(rows, piece.pivots);
        piece.hermite = std::move(rows);
    });

    for (std::size_t di = 0; di < degrees.size(); ++di)
        q.pieces_[degrees[di]] = std::move(built[di]);
    return q;
}

const QuotientModule::Piece& QuotientModule::piece(int d) const
{
    auto it = pieces_.find(d);
    if (it == pieces_.end())
        throw ComputationError("quotient: degree " + std::to_string(d) + " outside the window");
    return it->second;
}

const std::vector<Monomial>& QuotientModule::monomials(int d) const
{
    return piece(d).monomials;
}

const FgAbGroup& QuotientModule::graded_piece(int d) const
{
    return piece(d).pres.group();
}

const GroupPresentation& QuotientModule::presentation(int d) const
{
    return piece(d).pres;
}

std::vector<Int> QuotientModule::reduce(int d, std::vector<Int> coords) const
{
    const Piece& p = piece(d);
    if (coords.size() != p.monomials.size())
        throw ComputationError("quotient reduce: coordinate size mismatch");
    for (std::size_t i = 0; i < p.hermite.size(); ++i) {
        const Int& pivot = p.hermite[i][p.pivots[i]];
        Int q = floor_div(coords[p.pivots[i]], pivot);
        if (q != 0)
            for (std::size_t j = p.pivots[i]; j < coords.size(); ++j)
                if (p.hermite[i][j] != 0)
                    coords[j] -= q * p.hermite[i][j];
    }
    return coords;
}

std::vector<Int> QuotientModule::coords_of(const GradedPoly& p, int d) const
{
    const Piece& pc = piece(d);
    std::vector<Int> coords(pc.monomials.size(), Int(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != d)
            throw ComputationError("quotient coords: polynomial not homogeneous of degree " +
                                   std::to_string(d));
        auto it = pc.index.find(m);
        if (it == pc.index.end())
            throw ComputationError("quotient coords: monomial outside window: " + m.to_string());
        coords[it->second] = c;
    }
    return coords;
}

GradedPoly QuotientModule::poly_of(int d, const std::vector<Int>& coords) const
{
    const Piece& pc = piece(d);
    GradedPoly p;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            p.add_term(pc.monomials[i], coords[i]);
    return p;
}

GradedPoly QuotientModule::reduce(const GradedPoly& p) const
{
    GradedPoly out;
    std::map<int, GradedPoly> by_degree;
    for (const auto& [m, c] : p.terms())
        by_degree[m.degree()].add_term(m, c);
    for (const auto& [d, part] : by_degree)
        out += poly_of(d, reduce(d, coords_of(part, d)));
    return out;
}

long QuotientModule::total_rank() const
{
    long r = 0;
    for (const auto& [d, p] : pieces_)
        r += p.pres.group().free_rank;
    return r;
}

bool QuotientModule::torsion_free() const
{
    for (const auto& [d, p] : pieces_)
        if (!p.pres.group().torsion.empty())
            return false;
    return true;
}

QuotientMap::QuotientMap(const QuotientModule* src, const QuotientModule* tgt,
                         std::map<VarId, GradedPoly> substitution, GradedPoly multiplier)
    : src_(src), tgt_(tgt), sub_(std::move(substitution)), mult_(std::move(multiplier))
{
    int md = 0;
    if (!mult_.is_homogeneous(&md) || mult_.is_zero())
        md = mult_.is_zero() ? 0 : throw ComputationError("quotient map: multiplier not homogeneous");
    for (const auto& [v, img] : sub_) {
        int id = 0;
        if (!img.is_homogeneous(&id) || (!img.is_zero() && id != var_degree(v)))
            throw ComputationError("quotient map: substitution is not degree preserving");
    }
    shift_ = md;

    // well-definedness: every source ideal generator must land in the target ideal
    for (const auto& g : src_->gens()) {
        GradedPoly img = apply(g);
        if (img.is_zero())
            continue;
        int d = 0;
        img.is_homogeneous(&d);
        if (d > tgt_->max_degree() || d < tgt_->min_degree())
            continue;  // outside the comparable window
        if (!tgt_->reduce(img).is_zero())
            throw ComputationError("quotient map: relation " + g.to_string() +
                                   " is not preserved (image " + img.to_string() + ")");
    }
}

GradedPoly QuotientMap::apply(const GradedPoly& p) const
{
    return p.substitute(sub_) * mult_;
}

IntMatrix QuotientMap::matrix(int d) const
{
    const auto& src_mons = src_->monomials(d);
    const auto& tgt_mons = tgt_->monomials(d + shift_);
    IntMatrix m(tgt_mons.size(), src_mons.size());
    for (std::size_t j = 0; j < src_mons.size(); ++j) {
        GradedPoly img = apply(GradedPoly::monomial(src_mons[j], Int(1)));
        if (img.is_zero())
            continue;
        auto coords = tgt_->reduce(d + shift_, tgt_->coords_of(img, d + shift_));
        for (std::size_t i = 0; i < coords.size(); ++i)
            m.a[i][j] = coords[i];
    }
    return m;
}

}  // namespace bsym
