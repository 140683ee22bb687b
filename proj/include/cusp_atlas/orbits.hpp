// Unipotent orbits of complex classical groups: partitions, parity rules,
// component groups and the cuspidal pairs supported on distinguished orbits.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cusp_atlas {

enum class Family { Sp, SOodd, SOeven, Oodd, Oeven, GL };

std::string to_string(Family f);
// Throws DomainError on an unknown name.
Family family_from_string(const std::string& name);

struct GroupKind {
    Family family = Family::GL;
    int N = 0;  // size of the defining matrix representation

    bool operator==(const GroupKind&) const = default;
};

// Checks the parity constraint between family and N; throws DomainError.
GroupKind make_group(Family family, int N);

bool is_orthogonal(Family f);          // SO or O, either parity
bool is_special_orthogonal(Family f);  // SOodd or SOeven
bool is_full_orthogonal(Family f);     // Oodd or Oeven

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    // Accepts parts in any order; throws DomainError on a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // The single conversion point to the increasing order p_1 <= ... <= p_k
    // used by all symbol and elimination algorithms.
    std::vector<int> increasing() const;

    int total() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int multiplicity(int q) const;
    // Distinct parts in increasing order.
    std::vector<int> distinct_parts() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// All partitions of n in reverse lexicographic order, largest part first.
std::vector<Partition> partitions_of(int n);

// A +-1 value on each labelled generator z_q of an elementary abelian 2-group.
class SignCharacter {
public:
    SignCharacter() = default;
    explicit SignCharacter(std::map<int, int> values);
    // Builds a character from signs listed in increasing label order.
    static SignCharacter from_signs(const std::vector<int>& labels, const std::vector<int>& signs);
    static SignCharacter trivial(const std::vector<int>& labels);

    int at(int label) const;  // throws DomainError if absent
    bool contains(int label) const { return values_.count(label) != 0; }
    const std::map<int, int>& values() const { return values_; }
    std::vector<int> labels() const;
    int product() const;
    SignCharacter flipped() const;
    SignCharacter without(int label) const;
    bool empty() const { return values_.empty(); }

    bool operator==(const SignCharacter&) const = default;

private:
    std::map<int, int> values_;
};

std::string to_string(const SignCharacter& eta);

enum class Relation { Free, QuotientByFullProduct, DetOneSubgroup };
std::string to_string(Relation r);

struct ComponentGroup {
    std::vector<int> generators;  // labels q of z_q, increasing
    Relation relation = Relation::Free;
    std::uint64_t order = 1;
};

struct Verdict {
    bool valid = true;
    std::vector<std::string> problems;
};

// Sp: odd parts need even multiplicity. SO/O: even parts need even
// multiplicity. GL: no rule. The total must equal kind.N.
Verdict validate_partition(const GroupKind& kind, const Partition& p);
void require_valid(const GroupKind& kind, const Partition& p);

// All partitions of every even part with even multiplicity (SOeven only).
bool is_degenerate(const GroupKind& kind, const Partition& p);
int orbit_count(const GroupKind& kind, const Partition& p);
ComponentGroup component_group(const GroupKind& kind, const Partition& p);
bool is_distinguished(const GroupKind& kind, const Partition& p);

// Checks that eta is defined exactly on the generators of the component group.
void require_character(const GroupKind& kind, const Partition& p, const SignCharacter& eta);

struct CuspidalPair {
    int d = 0;
    Partition partition;
    // Sp: eps(z_{2i}) = (-1)^i. SO/O: the lift eps(z_{2i-1}) = (-1)^(i+1).
    SignCharacter character;
    // SO/O only: the two lifts to the full orthogonal group.
    std::optional<SignCharacter> lift_plus;
    std::optional<SignCharacter> lift_minus;
};

// Sp: N = d(d+1). SO/O: N = d^2. GL: N = 1. Otherwise empty.
std::optional<CuspidalPair> cuspidal_pair(const GroupKind& kind);

// Symplectic cuspidal character on (2, 4, ..., 2d).
SignCharacter symplectic_cuspidal_character(int d);
// Orthogonal lifts on (1, 3, ..., 2d-1); sign = +1 gives eps(z_1) = +1.
SignCharacter orthogonal_cuspidal_character(int d, int sign);

}  // namespace cusp_atlas
