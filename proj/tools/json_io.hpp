// JSON documents of the command-line tool: parsing into typed jobs with
// JSON-pointer diagnostics, and encoders for the library types.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cusp_atlas/bernstein.hpp"
#include "cusp_atlas/cuspsupport.hpp"
#include "cusp_atlas/enumerate.hpp"
#include "cusp_atlas/springer.hpp"

namespace cusp_atlas::io {

using json = nlohmann::json;

enum class Command { Validate, Springer, Support, CuspidalTest, Reducibility, Bernstein, Hecke, Enumerate, Selfcheck };
std::string to_string(Command c);
std::optional<Command> command_from_string(const std::string& name);

struct OrbitInput {
    GroupKind group{Family::Sp, 0};
    Partition partition;
    std::optional<SignCharacter> character;
};

struct ProductInput {
    std::vector<ProductFactor> factors;
};

struct ParameterInput {
    DiscreteParameter parameter;
    std::optional<ParameterCharacter> character;
};

struct ReducibilityInput {
    GroupKind group{Family::Sp, 0};
    IrrLabel pi;
    std::vector<int> a_values;
};

struct TripleInput {
    InertialTriple triple;
    std::vector<int> theta;
};

struct EnumerateInput {
    GroupKind group{Family::Sp, 0};
    std::vector<IrrLabel> signature;
    SignMode mode = SignMode::Canonical;
};

struct SelfcheckInput {
    std::optional<int> bound;
};

using Payload = std::variant<OrbitInput, ProductInput, ParameterInput, ReducibilityInput, TripleInput, EnumerateInput,
                             SelfcheckInput>;

struct JobSpec {
    Command command = Command::Validate;
    Payload payload;
};

// Validates the document against the schema of `command`. A "command" field
// in the document must agree with it. Throws SchemaError.
JobSpec parse_input(Command command, const json& document);

// Encoders; each one is accepted back by the matching decoder.
json encode(const GroupKind& g);
json encode(const Partition& p);
json encode(const SignCharacter& eta);
json encode(const IrrLabel& pi);
json encode_parameter(const DiscreteParameter& p, const ParameterCharacter* eta);
json encode(const InertialTriple& t);

GroupKind decode_group(const json& j, const std::string& pointer);
Partition decode_partition(const json& j, const std::string& pointer);
SignCharacter decode_character(const json& j, const std::string& pointer);
IrrLabel decode_label(const json& j, const std::string& pointer);
// Reads {"group", "blocks", "labels"?}; the character is present when every
// block carries a sign.
ParameterInput decode_parameter(const json& j, const std::string& pointer);
TripleInput decode_triple(const json& j, const std::string& pointer);

}  // namespace cusp_atlas::io
