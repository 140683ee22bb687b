#include "json_io.hpp"

#include <set>

#include "cusp_atlas/errors.hpp"

namespace cusp_atlas::io {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

// Object view that rejects unknown keys and reports missing ones.
class Object {
public:
    Object(const json& j, std::string pointer, std::set<std::string> allowed)
        : j_(j), pointer_(std::move(pointer)) {
        if (!j.is_object()) throw SchemaError(pointer_.empty() ? "/" : pointer_, "expected an object");
        for (const auto& item : j.items())
            if (!allowed.count(item.key())) throw SchemaError(child(pointer_, item.key()), "unknown field");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& required(const std::string& key) const {
        if (!j_.contains(key)) throw SchemaError(child(pointer_, key), "missing required field");
        return j_.at(key);
    }

    const json* optional(const std::string& key) const { return j_.contains(key) ? &j_.at(key) : nullptr; }

    std::string at(const std::string& key) const { return child(pointer_, key); }

private:
    const json& j_;
    std::string pointer_;
};

int read_int(const json& j, const std::string& pointer, int minimum) {
    if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
    const auto value = j.get<long long>();
    if (value < minimum) throw SchemaError(pointer, "expected an integer >= " + std::to_string(minimum));
    if (value > 1'000'000) throw SchemaError(pointer, "integer is too large");
    return static_cast<int>(value);
}

int read_sign(const json& j, const std::string& pointer) {
    if (!j.is_number_integer() || (j.get<long long>() != 1 && j.get<long long>() != -1))
        throw SchemaError(pointer, "sign must be 1 or -1");
    return j.get<int>();
}

std::string read_string(const json& j, const std::string& pointer) {
    if (!j.is_string()) throw SchemaError(pointer, "expected a string");
    return j.get<std::string>();
}

const json& read_array(const json& j, const std::string& pointer) {
    if (!j.is_array()) throw SchemaError(pointer, "expected an array");
    return j;
}

std::vector<int> read_int_list(const json& j, const std::string& pointer, int minimum) {
    std::vector<int> out;
    const json& arr = read_array(j, pointer);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_int(arr[i], child(pointer, i), minimum));
    return out;
}

void check_command(const Object& o, Command command) {
    if (const json* c = o.optional("command")) {
        const std::string name = read_string(*c, o.at("command"));
        if (name != to_string(command))
            throw SchemaError(o.at("command"), "document is for '" + name + "' but the command is '" +
                                                   to_string(command) + "'");
    }
}

// Labels defined inline in blocks or in a "labels" list; a string refers
// to a label defined elsewhere in the document.
class LabelTable {
public:
    void define(const IrrLabel& label, const std::string& pointer) {
        auto [it, inserted] = labels_.emplace(label.name, label);
        if (!inserted && !(it->second == label))
            throw SchemaError(pointer, "label '" + label.name + "' is defined twice with different data");
    }

    void collect(const json& pi, const std::string& pointer) {
        if (pi.is_object()) define(decode_label(pi, pointer), pointer);
    }

    std::string resolve(const json& pi, const std::string& pointer) const {
        if (pi.is_object()) return pi.at("name").get<std::string>();
        const std::string name = read_string(pi, pointer);
        if (!labels_.count(name)) throw SchemaError(pointer, "undefined label '" + name + "'");
        return name;
    }

    const std::map<std::string, IrrLabel>& all() const { return labels_; }

private:
    std::map<std::string, IrrLabel> labels_;
};

void collect_labels(const Object& o, LabelTable& table) {
    if (const json* list = o.optional("labels")) {
        read_array(*list, o.at("labels"));
        for (std::size_t i = 0; i < list->size(); ++i)
            table.define(decode_label((*list)[i], child(o.at("labels"), i)), child(o.at("labels"), i));
    }
}

OrbitInput decode_orbit(const Object& o) {
    OrbitInput in;
    in.group = decode_group(o.required("group"), o.at("group"));
    in.partition = decode_partition(o.required("partition"), o.at("partition"));
    if (const json* c = o.optional("character")) in.character = decode_character(*c, o.at("character"));
    return in;
}

ProductInput decode_product(const Object& o) {
    ProductInput in;
    const json& factors = read_array(o.required("factors"), o.at("factors"));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string at = child(o.at("factors"), i);
        Object f(factors[i], at, {"N", "partition", "character"});
        ProductFactor pf;
        pf.m = read_int(f.required("N"), f.at("N"), 1);
        pf.partition = decode_partition(f.required("partition"), f.at("partition"));
        pf.character = decode_character(f.required("character"), f.at("character"));
        in.factors.push_back(std::move(pf));
    }
    return in;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::Validate: return "validate";
        case Command::Springer: return "springer";
        case Command::Support: return "support";
        case Command::CuspidalTest: return "cuspidal-test";
        case Command::Reducibility: return "reducibility";
        case Command::Bernstein: return "bernstein";
        case Command::Hecke: return "hecke";
        case Command::Enumerate: return "enumerate";
        case Command::Selfcheck: return "selfcheck";
    }
    return "?";
}

std::optional<Command> command_from_string(const std::string& name) {
    for (Command c : {Command::Validate, Command::Springer, Command::Support, Command::CuspidalTest,
                      Command::Reducibility, Command::Bernstein, Command::Hecke, Command::Enumerate,
                      Command::Selfcheck})
        if (to_string(c) == name) return c;
    return std::nullopt;
}

json encode(const GroupKind& g) { return json{{"family", to_string(g.family)}, {"N", g.N}}; }

json encode(const Partition& p) { return json(p.parts()); }

json encode(const SignCharacter& eta) {
    json out = json::object();
    for (const auto& [label, sign] : eta.values()) out[std::to_string(label)] = sign;
    return out;
}

json encode(const IrrLabel& pi) { return json{{"name", pi.name}, {"dim", pi.dim}, {"type", to_string(pi.type)}}; }

json encode_parameter(const DiscreteParameter& p, const ParameterCharacter* eta) {
    json blocks = json::array();
    for (const Block& b : p.sorted_blocks()) {
        json entry{{"pi", encode(p.label(b.pi))}, {"a", b.a}};
        if (eta) entry["sign"] = eta->at(b);
        blocks.push_back(std::move(entry));
    }
    return json{{"group", encode(p.dual)}, {"blocks", std::move(blocks)}};
}

json encode(const InertialTriple& t) {
    json factors = json::array();
    for (const GLFactor& f : t.gl_factors) {
        json entry{{"pi", encode(f.pi)}, {"ell", f.ell}, {"torsion", f.torsion}, {"partner_m_prime", f.partner_m_prime}};
        if (f.x_minus) entry["x_minus"] = f.x_minus->to_string();
        factors.push_back(std::move(entry));
    }
    json cusp = json::array();
    for (const Block& b : t.cusp.sorted_blocks()) cusp.push_back(json{{"pi", encode(t.cusp.label(b.pi))}, {"a", b.a}});
    return json{{"group", encode(t.dual)}, {"gl_factors", std::move(factors)}, {"cusp_blocks", std::move(cusp)}};
}

GroupKind decode_group(const json& j, const std::string& pointer) {
    Object o(j, pointer, {"family", "N"});
    const std::string name = read_string(o.required("family"), o.at("family"));
    const int N = read_int(o.required("N"), o.at("N"), 0);
    Family family;
    if (name == "SO")
        family = N % 2 == 1 ? Family::SOodd : Family::SOeven;
    else if (name == "O")
        family = N % 2 == 1 ? Family::Oodd : Family::Oeven;
    else {
        try {
            family = family_from_string(name);
        } catch (const DomainError&) {
            throw SchemaError(o.at("family"), "unknown group family '" + name + "'");
        }
    }
    return make_group(family, N);
}

Partition decode_partition(const json& j, const std::string& pointer) {
    return Partition(read_int_list(j, pointer, 1));
}

SignCharacter decode_character(const json& j, const std::string& pointer) {
    if (!j.is_object()) throw SchemaError(pointer, "expected an object mapping parts to signs");
    std::map<int, int> values;
    for (const auto& item : j.items()) {
        const std::string at = child(pointer, item.key());
        int label = 0;
        try {
            std::size_t used = 0;
            label = std::stoi(item.key(), &used);
            if (used != item.key().size() || label < 1) throw std::invalid_argument("label");
        } catch (const std::exception&) {
            throw SchemaError(at, "character keys must be positive integers");
        }
        values[label] = read_sign(item.value(), at);
    }
    return SignCharacter(std::move(values));
}

IrrLabel decode_label(const json& j, const std::string& pointer) {
    Object o(j, pointer, {"name", "dim", "type"});
    IrrLabel pi;
    pi.name = read_string(o.required("name"), o.at("name"));
    if (pi.name.empty()) throw SchemaError(o.at("name"), "label names must be non-empty");
    pi.dim = read_int(o.required("dim"), o.at("dim"), 1);
    const std::string type = read_string(o.required("type"), o.at("type"));
    try {
        pi.type = sd_type_from_string(type);
    } catch (const DomainError&) {
        throw SchemaError(o.at("type"), "type must be orthogonal, symplectic or glpair");
    }
    return pi;
}

ParameterInput decode_parameter(const json& j, const std::string& pointer) {
    Object o(j, pointer, {"command", "group", "blocks", "labels"});
    ParameterInput in;
    in.parameter.dual = decode_group(o.required("group"), o.at("group"));
    LabelTable table;
    collect_labels(o, table);
    const json& blocks = read_array(o.required("blocks"), o.at("blocks"));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string at = child(o.at("blocks"), i);
        Object b(blocks[i], at, {"pi", "a", "sign"});
        table.collect(b.required("pi"), b.at("pi"));
    }
    std::size_t signed_blocks = 0;
    ParameterCharacter eta;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string at = child(o.at("blocks"), i);
        Object b(blocks[i], at, {"pi", "a", "sign"});
        Block block{table.resolve(b.required("pi"), b.at("pi")), read_int(b.required("a"), b.at("a"), 1)};
        in.parameter.blocks.push_back(block);
        if (const json* s = b.optional("sign")) {
            if (eta.count(block)) throw SchemaError(b.at("a"), "repeated block " + to_string(block));
            eta[block] = read_sign(*s, b.at("sign"));
            ++signed_blocks;
        } else if (signed_blocks > 0) {
            throw SchemaError(b.at("sign"), "either every block carries a sign or none does");
        }
    }
    if (signed_blocks > 0 && signed_blocks != blocks.size())
        throw SchemaError(child(o.at("blocks"), std::size_t{0}) + "/sign", "either every block carries a sign or none does");
    in.parameter.labels = table.all();
    if (signed_blocks > 0 || blocks.empty()) in.character = std::move(eta);
    return in;
}

TripleInput decode_triple(const json& j, const std::string& pointer) {
    Object o(j, pointer, {"command", "group", "gl_factors", "cusp_blocks", "labels", "theta"});
    TripleInput in;
    InertialTriple& t = in.triple;
    t.dual = decode_group(o.required("group"), o.at("group"));
    LabelTable table;
    collect_labels(o, table);
    const json& factors = read_array(o.required("gl_factors"), o.at("gl_factors"));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string at = child(o.at("gl_factors"), i);
        Object f(factors[i], at, {"pi", "ell", "torsion", "partner_m_prime", "x_minus"});
        table.collect(f.required("pi"), f.at("pi"));
    }
    const json* cusp = o.optional("cusp_blocks");
    if (cusp) {
        read_array(*cusp, o.at("cusp_blocks"));
        for (std::size_t i = 0; i < cusp->size(); ++i) {
            Object b((*cusp)[i], child(o.at("cusp_blocks"), i), {"pi", "a"});
            table.collect(b.required("pi"), b.at("pi"));
        }
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string at = child(o.at("gl_factors"), i);
        Object f(factors[i], at, {"pi", "ell", "torsion", "partner_m_prime", "x_minus"});
        GLFactor g;
        g.pi = table.all().at(table.resolve(f.required("pi"), f.at("pi")));
        g.ell = read_int(f.required("ell"), f.at("ell"), 0);
        if (const json* v = f.optional("torsion")) g.torsion = read_int(*v, f.at("torsion"), 1);
        if (const json* v = f.optional("partner_m_prime")) g.partner_m_prime = read_int(*v, f.at("partner_m_prime"), 0);
        if (const json* v = f.optional("x_minus")) {
            try {
                g.x_minus = Half::parse(read_string(*v, f.at("x_minus")));
            } catch (const std::invalid_argument&) {
                throw SchemaError(f.at("x_minus"), "expected a half-integer such as \"1/2\"");
            }
        }
        t.gl_factors.push_back(std::move(g));
    }
    t.cusp.labels = table.all();
    int n_sharp = 0;
    if (cusp) {
        for (std::size_t i = 0; i < cusp->size(); ++i) {
            Object b((*cusp)[i], child(o.at("cusp_blocks"), i), {"pi", "a"});
            Block block{table.resolve(b.required("pi"), b.at("pi")), read_int(b.required("a"), b.at("a"), 1)};
            n_sharp += t.cusp.label(block.pi).dim * block.a;
            t.cusp.blocks.push_back(block);
        }
    }
    t.cusp.dual = GroupKind{t.dual.family, n_sharp};
    if (const json* theta = o.optional("theta")) {
        read_array(*theta, o.at("theta"));
        for (std::size_t i = 0; i < theta->size(); ++i) in.theta.push_back(read_sign((*theta)[i], child(o.at("theta"), i)));
    }
    return in;
}

JobSpec parse_input(Command command, const json& document) {
    JobSpec job;
    job.command = command;
    switch (command) {
        case Command::Validate: {
            if (document.is_object() && document.contains("blocks")) {
                Object o(document, "", {"command", "group", "blocks", "labels"});
                check_command(o, command);
                job.payload = decode_parameter(document, "");
            } else {
                Object o(document, "", {"command", "group", "partition", "character"});
                check_command(o, command);
                job.payload = decode_orbit(o);
            }
            break;
        }
        case Command::Springer: {
            if (document.is_object() && document.contains("factors")) {
                Object o(document, "", {"command", "factors"});
                check_command(o, command);
                job.payload = decode_product(o);
            } else {
                Object o(document, "", {"command", "group", "partition", "character"});
                check_command(o, command);
                OrbitInput in = decode_orbit(o);
                if (!in.character) throw SchemaError("/character", "missing required field");
                job.payload = std::move(in);
            }
            break;
        }
        case Command::Support:
        case Command::CuspidalTest: {
            Object o(document, "", {"command", "group", "blocks", "labels"});
            check_command(o, command);
            ParameterInput in = decode_parameter(document, "");
            if (!in.character) throw SchemaError("/blocks/0/sign", "missing required field");
            job.payload = std::move(in);
            break;
        }
        case Command::Reducibility: {
            Object o(document, "", {"command", "group", "pi", "a_values"});
            check_command(o, command);
            ReducibilityInput in;
            in.group = decode_group(o.required("group"), o.at("group"));
            in.pi = decode_label(o.required("pi"), o.at("pi"));
            if (const json* a = o.optional("a_values")) in.a_values = read_int_list(*a, o.at("a_values"), 1);
            job.payload = std::move(in);
            break;
        }
        case Command::Bernstein:
        case Command::Hecke: {
            Object o(document, "", {"command", "group", "gl_factors", "cusp_blocks", "labels", "theta"});
            check_command(o, command);
            if (command == Command::Bernstein && o.has("theta"))
                throw SchemaError("/theta", "theta is only accepted by the hecke command");
            job.payload = decode_triple(document, "");
            break;
        }
        case Command::Enumerate: {
            Object o(document, "", {"command", "group", "signature", "mode"});
            check_command(o, command);
            EnumerateInput in;
            in.group = decode_group(o.required("group"), o.at("group"));
            if (const json* sig = o.optional("signature")) {
                read_array(*sig, o.at("signature"));
                for (std::size_t i = 0; i < sig->size(); ++i)
                    in.signature.push_back(decode_label((*sig)[i], child(o.at("signature"), i)));
            } else {
                in.signature = default_signature();
            }
            if (const json* mode = o.optional("mode")) {
                const std::string m = read_string(*mode, o.at("mode"));
                if (m == "canonical")
                    in.mode = SignMode::Canonical;
                else if (m == "all")
                    in.mode = SignMode::AllSignVectors;
                else
                    throw SchemaError(o.at("mode"), "mode must be canonical or all");
            }
            job.payload = std::move(in);
            break;
        }
        case Command::Selfcheck: {
            Object o(document, "", {"command", "bound"});
            check_command(o, command);
            SelfcheckInput in;
            if (const json* b = o.optional("bound")) in.bound = read_int(*b, o.at("bound"), 0);
            job.payload = in;
            break;
        }
    }
    return job;
}

}  // namespace cusp_atlas::io
