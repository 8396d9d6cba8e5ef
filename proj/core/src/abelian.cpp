#include "brokensym/abelian.hpp"

#include <sstream>

#include "brokensym/error.hpp"

namespace bsym {

std::string FgAbGroup::to_string() const
{
    if (trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1)
            os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

GroupPresentation::GroupPresentation(std::size_t ambient_rank, const IntMatrix& relations) : n_(ambient_rank)
{
    if (relations.rows != n_ && !(relations.rows == 0 && relations.cols == 0))
        throw ComputationError("presentation: relation rows != ambient rank");
    IntMatrix rel = relations;
    if (rel.rows == 0 && rel.cols == 0) {
        rel.rows = n_;
        rel.a.assign(n_, {});
    }
    SmithResult s = smith_normal_form(rel, true, true, false);
    U_ = std::move(*s.U);
    U_inv_ = std::move(*s.U_inv);
    diag_ = s.diag;

    // torsion generators first (d > 1, already in divisibility order), then free
    for (std::size_t i = 0; i < s.rank; ++i) {
        if (diag_[i] > 1) {
            gen_rows_.push_back(i);
            orders_.push_back(diag_[i]);
            group_.torsion.push_back(diag_[i]);
        }
    }
    for (std::size_t i = s.rank; i < n_; ++i) {
        gen_rows_.push_back(i);
        orders_.push_back(0);
        ++group_.free_rank;
    }
}

std::vector<Int> GroupPresentation::generator(std::size_t g) const
{
    std::vector<Int> v(n_);
    std::size_t col = gen_rows_[g];
    for (std::size_t i = 0; i < n_; ++i)
        v[i] = U_inv_.a[i][col];
    return v;
}

std::vector<Int> GroupPresentation::express(const std::vector<Int>& ambient) const
{
    if (ambient.size() != n_)
        throw ComputationError("express: dimension mismatch");
    std::vector<Int> y = U_.apply(ambient);
    std::vector<Int> out(gen_count());
    for (std::size_t g = 0; g < gen_count(); ++g) {
        std::size_t row = gen_rows_[g];
        out[g] = orders_[g] == 0 ? y[row] : pos_mod(y[row], orders_[g]);
    }
    return out;
}

bool GroupPresentation::is_zero_class(const std::vector<Int>& ambient) const
{
    for (const auto& c : express(ambient))
        if (c != 0)
            return false;
    return true;
}

bool fgab_morphism_well_defined(const std::vector<Int>& src_orders,
                                const std::vector<Int>& tgt_orders, const IntMatrix& m)
{
    if (m.cols != src_orders.size() || m.rows != tgt_orders.size())
        return false;
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (src_orders[j] == 0)
            continue;
        for (std::size_t i = 0; i < m.rows; ++i) {
            Int v = src_orders[j] * m.a[i][j];
            if (tgt_orders[i] == 0 ? v != 0 : v % tgt_orders[i] != 0)
                return false;
        }
    }
    return true;
}

namespace {

IntMatrix order_relations(const std::vector<Int>& orders)
{
    std::size_t n = orders.size();
    IntMatrix r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (orders[i] == 0)
            continue;
        std::vector<Int> col(n, Int(0));
        col[i] = orders[i];
        r.append_column(col);
    }
    return r;
}

}  // namespace

std::vector<FgAbGroup> fgab_homology(const FgAbComplex& c)
{
    const std::size_t nodes = c.orders.size();
    if (c.maps.size() + 1 != nodes && !(nodes == 0 && c.maps.empty()))
        throw ComputationError("fgab complex: map count mismatch");

    for (std::size_t i = 0; i < c.maps.size(); ++i)
        if (!fgab_morphism_well_defined(c.orders[i], c.orders[i + 1], c.maps[i]))
            throw ComputationError("fgab complex: map " + std::to_string(i) + " not well-defined");

    // composites must vanish in the presented target
    for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
        IntMatrix comp = c.maps[i + 1] * c.maps[i];
        for (std::size_t j = 0; j < comp.cols; ++j)
            for (std::size_t r = 0; r < comp.rows; ++r) {
                const Int& o = c.orders[i + 2][r];
                if (o == 0 ? comp.a[r][j] != 0 : comp.a[r][j] % o != 0)
                    throw ComputationError("fgab complex: composite nonzero on generator " +
                                           std::to_string(j) + " of node " + std::to_string(i));
            }
    }

    std::vector<FgAbGroup> out(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
        const std::size_t n = c.orders[i].size();
        // kernel of the outgoing map into the presented target
        IntMatrix kernel;  // columns: basis of { x : g x = 0 in target }
        if (i + 1 < nodes) {
            IntMatrix stacked = c.maps[i];
            IntMatrix tgt_rel = order_relations(c.orders[i + 1]);
            for (std::size_t jc = 0; jc < tgt_rel.cols; ++jc)
                stacked.append_column(tgt_rel.column(jc));
            IntMatrix full = kernel_basis(stacked);
            IntMatrix proj(n, full.cols);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t jc = 0; jc < full.cols; ++jc)
                    proj.a[r][jc] = full.a[r][jc];
            kernel = lattice_column_basis(proj);
        } else {
            kernel = IntMatrix::identity(n);
        }

        // relations inside the kernel: incoming image plus the node's own torsion
        IntMatrix rel_ambient = order_relations(c.orders[i]);
        if (i > 0) {
            const IntMatrix& f = c.maps[i - 1];
            for (std::size_t jc = 0; jc < f.cols; ++jc)
                rel_ambient.append_column(f.column(jc));
        }
        LinearSolver solver(kernel);
        IntMatrix rel_coords(kernel.cols, 0);
        for (std::size_t jc = 0; jc < rel_ambient.cols; ++jc) {
            auto sol = solver.solve(rel_ambient.column(jc));
            if (!sol)
                throw ComputationError("fgab complex: relation escapes kernel at node " +
                                       std::to_string(i));
            rel_coords.append_column(*sol);
        }
        out[i] = GroupPresentation(kernel.cols, rel_coords).group();
    }
    return out;
}

}  // namespace bsym
