#include "brokensym/chain.hpp"

#include "brokensym/error.hpp"

namespace bsym {

const std::vector<std::string> ChainComplex::no_labels_{};

void ChainComplex::set_module(int p, std::size_t rank, std::vector<std::string> labels)
{
    if (!labels.empty() && labels.size() != rank)
        throw ComputationError("chain module: label count != rank");
    modules_[p] = {rank, std::move(labels)};
    if (p_min_ > p_max_) {
        p_min_ = p_max_ = p;
    } else {
        p_min_ = std::min(p_min_, p);
        p_max_ = std::max(p_max_, p);
    }
}

void ChainComplex::set_differential(int p, IntMatrix d)
{
    if (d.rows != rank_at(p + 1) || d.cols != rank_at(p))
        throw ComputationError("chain differential: dimension mismatch at position " +
                               std::to_string(p));
    diff_[p] = std::move(d);
}

std::size_t ChainComplex::rank_at(int p) const
{
    auto it = modules_.find(p);
    return it == modules_.end() ? 0 : it->second.first;
}

const std::vector<std::string>& ChainComplex::labels_at(int p) const
{
    auto it = modules_.find(p);
    return it == modules_.end() ? no_labels_ : it->second.second;
}

const IntMatrix* ChainComplex::differential(int p) const
{
    auto it = diff_.find(p);
    return it == diff_.end() ? nullptr : &it->second;
}

IntMatrix ChainComplex::differential_or_zero(int p) const
{
    if (const IntMatrix* d = differential(p))
        return *d;
    return IntMatrix(rank_at(p + 1), rank_at(p));
}

void ChainComplex::validate() const
{
    for (const auto& [p, d] : diff_) {
        if (d.rows != rank_at(p + 1) || d.cols != rank_at(p))
            throw ComputationError("chain complex: stored differential has wrong shape");
        if (const IntMatrix* next = differential(p + 1)) {
            if (!(*next * d).is_zero())
                throw ComputationError("chain complex: d∘d != 0 at position " + std::to_string(p));
        }
    }
}

HomologySlot::HomologySlot(const IntMatrix& d_in, const IntMatrix& d_out)
{
    ambient_ = d_out.cols;
    if (d_in.rows != ambient_)
        throw ComputationError("homology: adjacent differential shapes disagree");
    kernel_ = kernel_basis(d_out);
    ksolver_ = LinearSolver(kernel_);
    IntMatrix w(kernel_.cols, 0);
    for (std::size_t j = 0; j < d_in.cols; ++j) {
        auto sol = ksolver_.solve(d_in.column(j));
        if (!sol)
            throw ComputationError("homology: boundary is not a cycle (d∘d != 0)");
        w.append_column(*sol);
    }
    pres_ = GroupPresentation(kernel_.cols, w);
}

std::vector<Int> HomologySlot::generator_cycle(std::size_t g) const
{
    return kernel_.apply(pres_.generator(g));
}

std::vector<Int> HomologySlot::express(const std::vector<Int>& cycle) const
{
    auto u = ksolver_.solve(cycle);
    if (!u)
        throw ComputationError("express: vector is not a cycle");
    return pres_.express(*u);
}

HomologySlot homology(const ChainComplex& c, int p)
{
    if (c.rank_at(p) > 0 && !c.differential(p) && c.rank_at(p + 1) > 0)
        throw ComputationError("homology: missing outgoing differential at position " +
                               std::to_string(p));
    if (c.rank_at(p - 1) > 0 && !c.differential(p - 1) && c.rank_at(p) > 0)
        throw ComputationError("homology: missing incoming differential at position " +
                               std::to_string(p));
    return HomologySlot(c.differential_or_zero(p - 1), c.differential_or_zero(p));
}

IntMatrix induced_map(const IntMatrix& f, const HomologySlot& src, const HomologySlot& tgt)
{
    IntMatrix m(tgt.gen_count(), 0);
    for (std::size_t g = 0; g < src.gen_count(); ++g)
        m.append_column(tgt.express(f.apply(src.generator_cycle(g))));
    m.rows = tgt.gen_count();
    if (src.gen_count() == 0)
        m = IntMatrix(tgt.gen_count(), 0);
    return m;
}

}  // namespace bsym
