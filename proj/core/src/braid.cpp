#include "brokensym/braid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "brokensym/error.hpp"

namespace bsym {

bool BraidWord::positive() const
{
    return std::all_of(letters.begin(), letters.end(), [](const BraidLetter& l) { return l.sign > 0; });
}

BraidWord BraidWord::positivized() const
{
    BraidWord w = *this;
    for (auto& l : w.letters)
        l.sign = 1;
    return w;
}

BraidWord BraidWord::positive_part() const
{
    BraidWord w;
    w.strands = strands;
    for (const auto& l : letters)
        if (l.sign > 0)
            w.letters.push_back(l);
    return w;
}

BraidWord BraidWord::subword(std::uint32_t position_mask) const
{
    BraidWord w;
    w.strands = strands;
    for (int j = 0; j < length(); ++j)
        if (position_mask & (1u << j))
            w.letters.push_back(letters[j]);
    return w;
}

std::string BraidWord::format() const
{
    std::ostringstream os;
    os << strands << ":";
    for (const auto& l : letters)
        os << " " << l.sign * l.index;
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset)
{
    throw UsageError("braid parse error at byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

BraidWord parse_braid(const std::string& text)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&](long& out) -> std::size_t {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        std::size_t digits = 0;
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000)
                parse_fail("integer too large", start);
            ++pos;
            ++digits;
        }
        if (digits == 0)
            parse_fail("malformed integer", start);
        out = text[start] == '-' ? -v : v;
        return start;
    };

    skip_ws();
    long r = 0;
    std::size_t r_off = read_int(r);
    if (r < 1)
        parse_fail("strand count must be >= 1", r_off);
    skip_ws();
    if (pos >= text.size() || text[pos] != ':')
        parse_fail("expected ':' after strand count", pos);
    ++pos;

    BraidWord w;
    w.strands = static_cast<int>(r);
    for (;;) {
        skip_ws();
        if (pos >= text.size())
            break;
        long v = 0;
        std::size_t off = read_int(v);
        if (v == 0)
            parse_fail("generator index must be nonzero", off);
        long idx = v < 0 ? -v : v;
        if (idx >= r)
            parse_fail("index out of range [1, " + std::to_string(r - 1) + "]", off);
        w.letters.push_back({static_cast<int>(idx), v < 0 ? -1 : 1});
    }
    return w;
}

BraidWord braid_from_json(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("braid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strands") || !j.contains("word"))
        throw UsageError("braid json: expected {\"strands\": r, \"word\": [...]}");
    if (!j["strands"].is_number_integer() || !j["word"].is_array())
        throw UsageError("braid json: wrong field types");
    std::ostringstream os;
    os << j["strands"].get<long>() << ":";
    for (const auto& v : j["word"]) {
        if (!v.is_number_integer())
            throw UsageError("braid json: word entries must be integers");
        os << " " << v.get<long>();
    }
    return parse_braid(os.str());
}

std::string braid_to_json(const BraidWord& w)
{
    nlohmann::ordered_json j;
    j["strands"] = w.strands;
    std::vector<int> letters;
    for (const auto& l : w.letters)
        letters.push_back(l.sign * l.index);
    j["word"] = letters;
    return j.dump();
}

IndexStats index_stats(const BraidWord& w, std::optional<int> min_length)
{
    IndexStats st;
    int pos = 0;
    for (const auto& l : w.letters) {
        ++pos;
        st.nu.insert(l.index);
        st.counts[l.index] += 1;
        st.positions[l.index].push_back(pos);
        if (l.sign > 0)
            ++st.l_plus;
        else
            ++st.l_minus;
    }
    st.l_shift = st.l_minus - 2 * st.l_plus;

    // orbits of {1..r} under the transpositions (s, s+1), s in nu
    std::vector<int> parent(w.strands + 1);
    for (int i = 1; i <= w.strands; ++i)
        parent[i] = i;
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (int s : st.nu)
        parent[find(s)] = find(s + 1);
    std::map<int, std::vector<int>> groups;
    for (int i = 1; i <= w.strands; ++i)
        groups[find(i)].push_back(i);
    for (auto& [root, members] : groups)
        st.orbits.push_back(members);
    std::sort(st.orbits.begin(), st.orbits.end());

    std::optional<int> known = min_length;
    if (!known && w.positive())
        known = w.length();  // positive words are geodesic
    if (known) {
        int diff = w.length() - *known;
        if (diff < 0 || diff % 2 != 0)
            throw UsageError("min length " + std::to_string(*known) + " incompatible with word length " +
                             std::to_string(w.length()));
        st.rho = diff / 2;
    }
    return st;
}

std::vector<BraidWord> markov_variants(const BraidWord& w, MarkovKind kind)
{
    std::vector<BraidWord> out;
    const int k = w.length();
    switch (kind) {
    case MarkovKind::cyclic: {
        std::set<BraidWord, decltype([](const BraidWord& a, const BraidWord& b) {
                     return a.format() < b.format();
                 })>
            seen;
        for (int rot = 0; rot < std::max(1, k); ++rot) {
            BraidWord v;
            v.strands = w.strands;
            for (int j = 0; j < k; ++j)
                v.letters.push_back(w.letters[(j + rot) % k]);
            if (seen.insert(v).second)
                out.push_back(v);
        }
        break;
    }
    case MarkovKind::braid_relation: {
        for (int j = 0; j + 2 < k; ++j) {
            const auto &a = w.letters[j], &b = w.letters[j + 1], &c = w.letters[j + 2];
            if (a.sign != b.sign || b.sign != c.sign)
                continue;
            if (a.index == c.index && (b.index == a.index + 1 || a.index == b.index + 1)) {
                BraidWord v = w;
                v.letters[j] = b;
                v.letters[j + 1] = a;
                v.letters[j + 2] = b;
                out.push_back(v);
            }
        }
        break;
    }
    case MarkovKind::far_commutation: {
        for (int j = 0; j + 1 < k; ++j) {
            const auto &a = w.letters[j], &b = w.letters[j + 1];
            if (std::abs(a.index - b.index) >= 2) {
                BraidWord v = w;
                std::swap(v.letters[j], v.letters[j + 1]);
                out.push_back(v);
            }
        }
        break;
    }
    case MarkovKind::free_reduction: {
        for (int j = 0; j + 1 < k; ++j) {
            const auto &a = w.letters[j], &b = w.letters[j + 1];
            if (a.index == b.index && a.sign == -b.sign) {
                BraidWord v;
                v.strands = w.strands;
                for (int t = 0; t < k; ++t)
                    if (t != j && t != j + 1)
                        v.letters.push_back(w.letters[t]);
                out.push_back(v);
            }
        }
        break;
    }
    case MarkovKind::stabilize: {
        for (int sign : {+1, -1}) {
            BraidWord v = w;
            v.strands = w.strands + 1;
            v.letters.push_back({w.strands, sign});
            out.push_back(v);
        }
        break;
    }
    }
    return out;
}

}  // namespace bsym
