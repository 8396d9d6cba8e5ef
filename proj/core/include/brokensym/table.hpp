#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "brokensym/abelian.hpp"
#include "brokensym/braid.hpp"

namespace bsym {

struct NormalizationRecord {
    int l_shift = 0;
    std::optional<int> rho;
    bool applied = false;   // shifts folded into the entries
    bool relative = false;  // rho unavailable; t-column origin is arbitrary
    std::pair<int, int> comparison_offset = {0, 0};  // (dt, ds) found by a comparison
};

// E-page data: entries keyed by (t, s, h). Entries with trivial groups are
// not stored. valid_s_min/max delimit the window the engine computed.
class TriplyGradedTable {
public:
    std::string page;  // "E1" or "E2"
    std::string word_text;
    int max_deg = 0;
    int valid_s_min = 0, valid_s_max = 0;
    NormalizationRecord norm;
    std::optional<int> twist_n;

    void set(int t, int s, int h, FgAbGroup g);
    const FgAbGroup* get(int t, int s, int h) const;
    const std::map<std::tuple<int, int, int>, FgAbGroup>& entries() const { return e_; }
    bool empty() const { return e_.empty(); }
    long total_rank() const;
    std::vector<Int> torsion_multiset() const;  // sorted over all entries

    // (t, s)-collapsed view: ranks summed over h, torsion multisets merged
    std::map<std::pair<int, int>, std::pair<long, std::vector<Int>>> folded_ts() const;

    // ranks per s for one t-column (h folded); torsion per s alongside
    std::map<int, std::pair<long, std::vector<Int>>> column(int t) const;

    TriplyGradedTable normalized(int l_shift, std::optional<int> rho) const;

    std::string to_json() const;
    std::string to_text() const;

private:
    std::map<std::tuple<int, int, int>, FgAbGroup> e_;
};

struct TableComparison {
    bool equal = false;
    std::pair<int, int> offset = {0, 0};  // (dt, ds) applied to the second table
    std::string detail;
};

// Entrywise equality of the (t, s)-collapsed tables on the overlap of the
// valid windows, allowing one global (dt, ds) offset. Fails if the overlap
// is empty.
TableComparison compare_tables(const TriplyGradedTable& a, const TriplyGradedTable& b);

}  // namespace bsym
