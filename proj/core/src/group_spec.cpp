#include "workbench/group_spec.hpp"

#include <fstream>

#include "json.hpp"

namespace workbench {

namespace {

std::size_t parse_count(const std::string& text, const std::string& spec) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad group spec: " + spec);
    }
    if (pos != text.size()) throw std::invalid_argument("bad group spec: " + spec);
    return std::size_t(value);
}

FiniteGroup from_generator_file(const std::string& path, std::size_t order_cap) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open generator file: " + path);
    std::size_t degree = 0;
    std::vector<Permutation> gens;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        degree = doc.at("degree").get<std::size_t>();
        for (const auto& images : doc.at("generators"))
            gens.push_back(Permutation::from_one_based(images.get<std::vector<int>>()));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad generator file " + path + ": " + e.what());
    }
    for (const auto& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch in " + path);
    return FiniteGroup::generate(degree, std::move(gens), order_cap);
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec, std::size_t order_cap) {
    if (spec == "h4-sylow") return h4_sylow();
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad group spec: " + spec);
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "gens") return from_generator_file(arg, order_cap);
    std::size_t n = parse_count(arg, spec);
    if (kind == "sym") return symmetric_group(n, order_cap);
    if (kind == "alt") return alternating_group(n, order_cap);
    if (kind == "sylow-sym") return sylow_symmetric(n, order_cap);
    if (kind == "sylow-alt") return sylow_alternating(n, order_cap);
    if (kind == "dihedral") return dihedral_group(n);
    throw std::invalid_argument("bad group spec: " + spec);
}

}  // namespace workbench
