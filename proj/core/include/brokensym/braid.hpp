#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bsym {

struct BraidLetter {
    int index;  // 1 <= index <= strands-1
    int sign;   // +1 or -1
    bool operator==(const BraidLetter&) const = default;
};

// A braid word on `strands` strands; empty words are valid for any r >= 1.
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool positive() const;
    BraidWord positivized() const;     // all signs set to +1
    BraidWord positive_part() const;   // positive letters only, in order
    BraidWord subword(std::uint32_t position_mask) const;  // bit j-1 keeps letter j
    std::string format() const;        // canonical "r: i1 i2 ..." text
    bool operator==(const BraidWord&) const = default;
};

// Parses "<r> : <signed ints>"; throws UsageError carrying the byte offset of
// the offending token.
BraidWord parse_braid(const std::string& text);

// {"strands": r, "word": [1, 2, -1]} as used in job files.
BraidWord braid_from_json(const std::string& json_text);
std::string braid_to_json(const BraidWord& w);

// Occurrence combinatorics of the (positivized) index sequence, plus the
// normalization data carried by the word itself.
struct IndexStats {
    std::set<int> nu;                          // indices that occur
    std::map<int, int> counts;                 // occurrences per index
    std::map<int, std::vector<int>> positions; // 1-based occurrence positions
    std::vector<std::vector<int>> orbits;      // partition of {1..r} under s <-> s+1, s in nu
    int l_plus = 0, l_minus = 0;
    int l_shift = 0;                           // l_minus - 2*l_plus
    std::optional<int> rho;                    // (k - |w|)/2 when |w| is known
};

// rho uses |w| = k for all-positive words; otherwise min_length must be
// supplied by the caller or rho is left unavailable.
IndexStats index_stats(const BraidWord& w, std::optional<int> min_length = std::nullopt);

enum class MarkovKind { cyclic, braid_relation, far_commutation, free_reduction, stabilize };

// Words whose closures are the same link as the input's. braid_relation and
// far_commutation return an empty list when no applicable site exists.
std::vector<BraidWord> markov_variants(const BraidWord& w, MarkovKind kind);

}  // namespace bsym
