#include "cusp_atlas/orbits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cusp_atlas/errors.hpp"

namespace cusp_atlas {

std::string to_string(Family f) {
    switch (f) {
        case Family::Sp: return "Sp";
        case Family::SOodd: return "SOodd";
        case Family::SOeven: return "SOeven";
        case Family::Oodd: return "Oodd";
        case Family::Oeven: return "Oeven";
        case Family::GL: return "GL";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::Sp, Family::SOodd, Family::SOeven, Family::Oodd, Family::Oeven, Family::GL})
        if (to_string(f) == name) return f;
    throw DomainError("unknown group family '" + name + "'");
}

GroupKind make_group(Family family, int N) {
    if (N < 0) throw DomainError("negative matrix size " + std::to_string(N));
    const bool even = N % 2 == 0;
    switch (family) {
        case Family::Sp:
        case Family::SOeven:
        case Family::Oeven:
            if (!even) throw DomainError(to_string(family) + " requires N even, got " + std::to_string(N));
            break;
        case Family::SOodd:
        case Family::Oodd:
            if (even) throw DomainError(to_string(family) + " requires N odd, got " + std::to_string(N));
            break;
        case Family::GL: break;
    }
    return GroupKind{family, N};
}

bool is_special_orthogonal(Family f) { return f == Family::SOodd || f == Family::SOeven; }
bool is_full_orthogonal(Family f) { return f == Family::Oodd || f == Family::Oeven; }
bool is_orthogonal(Family f) { return is_special_orthogonal(f) || is_full_orthogonal(f); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int q : parts_)
        if (q <= 0) throw DomainError("partition parts must be positive, got " + std::to_string(q));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::vector<int> Partition::increasing() const { return {parts_.rbegin(), parts_.rend()}; }

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int q) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), q));
}

std::vector<int> Partition::distinct_parts() const {
    std::vector<int> out = increasing();
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
    os << ')';
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int q = std::min(remaining, max_part); q >= 1; --q) {
            current.push_back(q);
            rec(remaining - q, q);
            current.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

SignCharacter::SignCharacter(std::map<int, int> values) : values_(std::move(values)) {
    for (const auto& [label, sign] : values_)
        if (sign != 1 && sign != -1)
            throw DomainError("sign on z_" + std::to_string(label) + " must be +1 or -1");
}

SignCharacter SignCharacter::from_signs(const std::vector<int>& labels, const std::vector<int>& signs) {
    if (labels.size() != signs.size()) throw DomainError("label and sign lists differ in length");
    std::map<int, int> values;
    for (std::size_t i = 0; i < labels.size(); ++i) values[labels[i]] = signs[i];
    return SignCharacter(std::move(values));
}

SignCharacter SignCharacter::trivial(const std::vector<int>& labels) {
    return from_signs(labels, std::vector<int>(labels.size(), 1));
}

int SignCharacter::at(int label) const {
    auto it = values_.find(label);
    if (it == values_.end()) throw DomainError("character is not defined on z_" + std::to_string(label));
    return it->second;
}

std::vector<int> SignCharacter::labels() const {
    std::vector<int> out;
    for (const auto& kv : values_) out.push_back(kv.first);
    return out;
}

int SignCharacter::product() const {
    int prod = 1;
    for (const auto& kv : values_) prod *= kv.second;
    return prod;
}

SignCharacter SignCharacter::flipped() const {
    auto values = values_;
    for (auto& kv : values) kv.second = -kv.second;
    return SignCharacter(std::move(values));
}

SignCharacter SignCharacter::without(int label) const {
    auto values = values_;
    values.erase(label);
    return SignCharacter(std::move(values));
}

std::string to_string(const SignCharacter& eta) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [label, sign] : eta.values()) {
        os << (first ? "" : ",") << 'z' << label << ':' << (sign > 0 ? '+' : '-');
        first = false;
    }
    os << '}';
    return os.str();
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Free: return "Free";
        case Relation::QuotientByFullProduct: return "QuotientByFullProduct";
        case Relation::DetOneSubgroup: return "DetOneSubgroup";
    }
    return "?";
}

Verdict validate_partition(const GroupKind& kind, const Partition& p) {
    Verdict v;
    if (p.total() != kind.N) {
        v.valid = false;
        v.problems.push_back("parts sum to " + std::to_string(p.total()) + " but N = " + std::to_string(kind.N));
    }
    const bool sp = kind.family == Family::Sp;
    const bool orth = is_orthogonal(kind.family);
    for (int q : p.distinct_parts()) {
        const int r = p.multiplicity(q);
        if (r % 2 == 0) continue;
        if (sp && q % 2 == 1) {
            v.valid = false;
            v.problems.push_back("odd part " + std::to_string(q) + " has odd multiplicity " + std::to_string(r));
        }
        if (orth && q % 2 == 0) {
            v.valid = false;
            v.problems.push_back("even part " + std::to_string(q) + " has odd multiplicity " + std::to_string(r));
        }
    }
    return v;
}

void require_valid(const GroupKind& kind, const Partition& p) {
    Verdict v = validate_partition(kind, p);
    if (!v.valid)
        throw DomainError("invalid partition " + to_string(p) + " for " + to_string(kind.family) + "_" +
                          std::to_string(kind.N) + ": " + v.problems.front());
}

bool is_degenerate(const GroupKind& kind, const Partition& p) {
    if (kind.family != Family::SOeven && kind.family != Family::Oeven) return false;
    if (p.empty()) return false;
    for (int q : p.distinct_parts())
        if (q % 2 == 1 || p.multiplicity(q) % 2 == 1) return false;
    return true;
}

int orbit_count(const GroupKind& kind, const Partition& p) {
    require_valid(kind, p);
    return kind.family == Family::SOeven && is_degenerate(kind, p) ? 2 : 1;
}

namespace {
std::vector<int> generator_labels(const GroupKind& kind, const Partition& p) {
    std::vector<int> out;
    if (kind.family == Family::GL) return out;
    const int parity = kind.family == Family::Sp ? 0 : 1;
    for (int q : p.distinct_parts())
        if (q % 2 == parity) out.push_back(q);
    return out;
}
}  // namespace

ComponentGroup component_group(const GroupKind& kind, const Partition& p) {
    require_valid(kind, p);
    ComponentGroup g;
    g.generators = generator_labels(kind, p);
    const auto n = static_cast<int>(g.generators.size());
    if (is_special_orthogonal(kind.family)) {
        g.relation = Relation::QuotientByFullProduct;
        g.order = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    } else {
        g.relation = Relation::Free;
        g.order = std::uint64_t{1} << n;
    }
    return g;
}

bool is_distinguished(const GroupKind& kind, const Partition& p) {
    require_valid(kind, p);
    if (kind.family == Family::GL) return p.length() <= 1;
    const int parity = kind.family == Family::Sp ? 0 : 1;
    const auto distinct = p.distinct_parts();
    if (static_cast<int>(distinct.size()) != p.length()) return false;
    return std::all_of(distinct.begin(), distinct.end(), [&](int q) { return q % 2 == parity; });
}

void require_character(const GroupKind& kind, const Partition& p, const SignCharacter& eta) {
    const auto expected = generator_labels(kind, p);
    if (eta.labels() != expected) {
        std::string want;
        for (int q : expected) want += (want.empty() ? "z" : ",z") + std::to_string(q);
        throw DomainError("character " + to_string(eta) + " does not match generators {" + want + "} of " +
                          to_string(p));
    }
}

SignCharacter symplectic_cuspidal_character(int d) {
    std::map<int, int> values;
    for (int i = 1; i <= d; ++i) values[2 * i] = i % 2 == 0 ? 1 : -1;
    return SignCharacter(std::move(values));
}

SignCharacter orthogonal_cuspidal_character(int d, int sign) {
    std::map<int, int> values;
    for (int i = 1; i <= d; ++i) values[2 * i - 1] = (i % 2 == 1 ? 1 : -1) * sign;
    return SignCharacter(std::move(values));
}

std::optional<CuspidalPair> cuspidal_pair(const GroupKind& kind) {
    const int N = kind.N;
    if (kind.family == Family::GL) {
        if (N != 1) return std::nullopt;
        return CuspidalPair{0, Partition({1}), SignCharacter{}, std::nullopt, std::nullopt};
    }
    if (kind.family == Family::Sp) {
        for (int d = 0; d * (d + 1) <= N; ++d) {
            if (d * (d + 1) != N) continue;
            std::vector<int> parts;
            for (int i = 1; i <= d; ++i) parts.push_back(2 * i);
            return CuspidalPair{d, Partition(parts), symplectic_cuspidal_character(d), std::nullopt, std::nullopt};
        }
        return std::nullopt;
    }
    for (int d = 0; d * d <= N; ++d) {
        if (d * d != N) continue;
        std::vector<int> parts;
        for (int i = 1; i <= d; ++i) parts.push_back(2 * i - 1);
        auto plus = orthogonal_cuspidal_character(d, 1);
        auto minus = orthogonal_cuspidal_character(d, -1);
        return CuspidalPair{d, Partition(parts), plus, plus, minus};
    }
    return std::nullopt;
}

}  // namespace cusp_atlas
