#include "cusp_atlas/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cusp_atlas/errors.hpp"

namespace cusp_atlas {

namespace {

std::string list_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

bool has_consecutive(const std::vector<int>& sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1] + 1) return true;
    return false;
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::vector<int>> runs(const std::vector<int>& sorted) {
    std::vector<std::vector<int>> out;
    for (int x : sorted) {
        if (!out.empty() && out.back().back() == x - 1)
            out.back().push_back(x);
        else
            out.push_back({x});
    }
    return out;
}

void sort_symbol(USymbol& s) {
    std::sort(s.A.begin(), s.A.end());
    std::sort(s.B.begin(), s.B.end());
}

void require_distinguished(const GroupKind& kind, const Partition& p) {
    if (!is_distinguished(kind, p))
        throw DomainError("partition " + to_string(p) + " is not distinguished for " + to_string(kind.family));
}

}  // namespace

bool USymbol::operator==(const USymbol& other) const {
    if (kind != other.kind) return false;
    if (A == other.A && B == other.B) return true;
    return kind == SymbolKind::OUnordered && A == other.B && B == other.A;
}

std::string to_string(const USymbol& s) {
    return (s.kind == SymbolKind::SpOrdered ? "(" : "{") + list_to_string(s.A) + "," + list_to_string(s.B) +
           (s.kind == SymbolKind::SpOrdered ? ")" : "}");
}

SymbolKind symbol_kind(Family f) {
    if (f == Family::Sp) return SymbolKind::SpOrdered;
    if (is_orthogonal(f)) return SymbolKind::OUnordered;
    throw DomainError("no u-symbols are attached to " + to_string(f));
}

Verdict check_symbol(const USymbol& s, int N) {
    Verdict v;
    auto fail = [&](std::string msg) {
        v.valid = false;
        v.problems.push_back(std::move(msg));
    };
    if (!std::is_sorted(s.A.begin(), s.A.end()) || !std::is_sorted(s.B.begin(), s.B.end()))
        fail("entries are not sorted");
    if (has_consecutive(s.A)) fail("A contains two consecutive integers");
    if (has_consecutive(s.B)) fail("B contains two consecutive integers");
    for (const auto* set : {&s.A, &s.B})
        for (int x : *set)
            if (x < 0) fail("negative entry " + std::to_string(x));
    const long size = static_cast<long>(s.A.size() + s.B.size());
    const long sum = std::accumulate(s.A.begin(), s.A.end(), 0L) + std::accumulate(s.B.begin(), s.B.end(), 0L);
    if (s.kind == SymbolKind::SpOrdered) {
        if (size % 2 == 0) fail("|A|+|B| is even");
        if (!s.B.empty() && s.B.front() == 0) fail("B contains 0");
        if (2 * sum != N + size * (size - 1)) fail("entry sum does not match rank " + std::to_string(N));
    } else {
        if (2 * sum != N + (size - 1) * (size - 1) - 1)
            fail("entry sum does not match rank " + std::to_string(N));
    }
    return v;
}

USymbol canonical(const USymbol& s) {
    USymbol out = s;
    const int second = s.kind == SymbolKind::SpOrdered ? 1 : 0;
    while (!out.A.empty() && !out.B.empty() && out.A.front() == 0 && out.B.front() == second) {
        out.A.erase(out.A.begin());
        out.B.erase(out.B.begin());
        for (int& x : out.A) x -= 2;
        for (int& x : out.B) x -= 2;
    }
    if (out.kind == SymbolKind::OUnordered &&
        std::make_pair(out.A.size(), out.A) < std::make_pair(out.B.size(), out.B))
        std::swap(out.A, out.B);
    return out;
}

USymbol distinguished_symbol(const GroupKind& kind, const Partition& p) {
    require_valid(kind, p);
    USymbol s;
    s.kind = symbol_kind(kind.family);
    std::vector<int> inc = p.increasing();
    if (s.kind == SymbolKind::SpOrdered) {
        if (inc.size() % 2 == 1) inc.insert(inc.begin(), 0);
    } else {
        if (static_cast<int>(inc.size() % 2) != kind.N % 2) inc.insert(inc.begin(), 0);
    }
    std::vector<int> evens;  // y with p' = 2y
    std::vector<int> odds;   // y with p' = 2y + 1
    for (std::size_t i = 0; i < inc.size(); ++i) {
        const int shifted = inc[i] + static_cast<int>(i);
        (shifted % 2 == 0 ? evens : odds).push_back(shifted / 2);
    }
    if (s.kind == SymbolKind::SpOrdered) {
        if (evens.size() != odds.size())
            throw InvariantError("unbalanced shifted sequence for " + to_string(p));
        s.A.push_back(0);
        for (std::size_t j = 0; j < odds.size(); ++j) s.A.push_back(odds[j] + static_cast<int>(j) + 2);
        for (std::size_t j = 0; j < evens.size(); ++j) s.B.push_back(evens[j] + static_cast<int>(j) + 1);
    } else {
        for (std::size_t j = 0; j < odds.size(); ++j) s.A.push_back(odds[j] + static_cast<int>(j));
        for (std::size_t j = 0; j < evens.size(); ++j) s.B.push_back(evens[j] + static_cast<int>(j));
    }
    sort_symbol(s);
    return s;
}

IntervalStructure interval_structure(const GroupKind& kind, const Partition& p) {
    const USymbol s = distinguished_symbol(kind, p);
    IntervalStructure out;
    for (auto& run : runs(symmetric_difference(s.A, s.B))) {
        if (s.kind == SymbolKind::SpOrdered && run.front() == 0)
            out.H = std::move(run);
        else
            out.intervals.push_back(std::move(run));
    }
    const int parity = s.kind == SymbolKind::SpOrdered ? 0 : 1;
    for (int q : p.distinct_parts())
        if (q % 2 == parity) out.parts.push_back(q);
    if (out.parts.size() != out.intervals.size())
        throw InvariantError("interval count does not match generator count for " + to_string(p));
    for (std::size_t r = 0; r < out.parts.size(); ++r)
        if (static_cast<int>(out.intervals[r].size()) != p.multiplicity(out.parts[r]))
            throw InvariantError("interval length does not match multiplicity for " + to_string(p));
    return out;
}

USymbol symbol_for_pair(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    require_character(kind, p, eta);
    USymbol s = distinguished_symbol(kind, p);
    const IntervalStructure is = interval_structure(kind, p);
    std::set<int> a(s.A.begin(), s.A.end());
    std::set<int> b(s.B.begin(), s.B.end());
    for (std::size_t r = 0; r < is.intervals.size(); ++r) {
        if (eta.at(is.parts[r]) == 1) continue;
        for (int x : is.intervals[r]) {
            if (a.erase(x))
                b.insert(x);
            else if (b.erase(x))
                a.insert(x);
        }
    }
    s.A.assign(a.begin(), a.end());
    s.B.assign(b.begin(), b.end());
    return s;
}

USymbol symbol_from_character(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    require_distinguished(kind, p);
    require_character(kind, p, eta);
    USymbol s;
    s.kind = symbol_kind(kind.family);
    const std::vector<int> inc = p.increasing();
    const int k = static_cast<int>(inc.size());
    for (int i = 1; i <= k; ++i) {
        const int q = inc[i - 1];
        const int sign = eta.at(q);
        const bool odd_index = i % 2 == 1;
        int point = 0;
        bool to_A = false;
        if (s.kind == SymbolKind::SpOrdered) {
            if (k % 2 == 0) {
                point = q / 2 + i;
                to_A = (sign == 1) != odd_index;
            } else {
                point = q / 2 + i + 1;
                to_A = (sign == 1) == odd_index;
            }
        } else {
            point = (q - 1) / 2 + i - 1;
            to_A = (sign == 1) == odd_index;
        }
        (to_A ? s.A : s.B).push_back(point);
    }
    if (s.kind == SymbolKind::SpOrdered) {
        s.A.push_back(0);
        if (k % 2 == 1) s.B.push_back(1);
    }
    sort_symbol(s);
    return s;
}

int defect(const USymbol& s) {
    const int d = static_cast<int>(s.A.size()) - static_cast<int>(s.B.size());
    return s.kind == SymbolKind::SpOrdered ? d : std::abs(d);
}

int defect_formula(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    require_distinguished(kind, p);
    require_character(kind, p, eta);
    const std::vector<int> inc = p.increasing();
    const int k = static_cast<int>(inc.size());
    int alternating = 0;  // sum of (-1)^(i+1) eta(z_{p_i})
    for (int i = 1; i <= k; ++i) alternating += (i % 2 == 1 ? 1 : -1) * eta.at(inc[i - 1]);
    if (symbol_kind(kind.family) == SymbolKind::SpOrdered) return k % 2 == 0 ? 1 - alternating : alternating;
    return std::abs(alternating);
}

int defect_formula_alternative(const Partition& p, const SignCharacter& eta) {
    const std::vector<int> inc = p.increasing();
    const int k = static_cast<int>(inc.size());
    int sum = 0;
    for (int i = 1; i <= k; ++i) sum += ((i + k) % 2 == 0 ? 1 : -1) * eta.at(inc[i - 1]);
    return sum + 2 * k + 2 - 2 * ((k + 1) / 2);
}

}  // namespace cusp_atlas
