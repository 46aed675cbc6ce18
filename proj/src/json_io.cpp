#include "orientalis/json_io.hpp"

namespace orientalis {

using nlohmann::json;

json polygraph_to_json(const Polygraph& s) {
    json dims = json::array();
    json boundaries = json::object();
    for (int d = 0; d <= s.max_dim(); ++d) {
        json level = json::array();
        for (const auto& k : s.generators(d)) {
            level.push_back(k.serial());
            if (d >= 1) {
                boundaries[k.serial()] = {{"src", print_cell(s.src(k))},
                                          {"tgt", print_cell(s.tgt(k))}};
            }
        }
        dims.push_back(std::move(level));
    }
    return json{{"dims", std::move(dims)}, {"boundaries", std::move(boundaries)}};
}

std::shared_ptr<const Polygraph> polygraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j["dims"].is_array())
        throw CellError("polygraph JSON needs a \"dims\" array");
    auto s = std::make_shared<Polygraph>();
    const json& dims = j["dims"];
    const json boundaries = j.value("boundaries", json::object());
    for (std::size_t d = 0; d < dims.size(); ++d) {
        if (!dims[d].is_array())
            throw CellError("polygraph JSON: dims entries must be arrays");
        for (const auto& entry : dims[d]) {
            if (!entry.is_string())
                throw CellError("polygraph JSON: keys must be strings");
            GenKey k = GenKey::from_serial(entry.get<std::string>(),
                                           static_cast<int>(d));
            if (k.dim() != static_cast<int>(d))
                throw CellError("polygraph JSON: key " + k.to_string() +
                                " listed in dimension " + std::to_string(d));
            if (d == 0) {
                s->add_generator(k);
                continue;
            }
            auto it = boundaries.find(entry.get<std::string>());
            if (it == boundaries.end())
                throw CellError("polygraph JSON: missing boundary for " +
                                k.to_string());
            Cell src = parse_cell((*it).at("src").get<std::string>(), *s);
            Cell tgt = parse_cell((*it).at("tgt").get<std::string>(), *s);
            s->add_generator(k, std::move(src), std::move(tgt));
        }
    }
    return s;
}

namespace {

json chain_to_json(const Chain& c) {
    json out = json::object();
    for (const auto& [k, v] : c.terms()) out[k.serial()] = v;
    return out;
}

} // namespace

json adc_to_json(const AugDirComplex& k) {
    json basis = json::array();
    json d = json::object();
    for (int m = 0; m <= k.max_dim(); ++m) {
        json level = json::array();
        for (const auto& b : k.basis(m)) {
            level.push_back(b.serial());
            if (m >= 1) d[b.serial()] = chain_to_json(k.diff(b));
        }
        basis.push_back(std::move(level));
    }
    return json{{"basis", std::move(basis)}, {"d", std::move(d)}};
}

json table_to_json(const CellTable& t) {
    json rows = json::array();
    for (int i = 0; i <= t.dim(); ++i)
        rows.push_back(json{{"neg", chain_to_json(t.neg(i))},
                            {"pos", chain_to_json(t.pos(i))}});
    return json{{"dim", t.dim()}, {"rows", std::move(rows)}};
}

json cone_to_json(const Cone& c) {
    json aux = json::array();
    for (const auto& cell : c.aux) aux.push_back(print_cell(cell));
    return json{{"aux", std::move(aux)},
                {"principal", print_cell(c.principal)},
                {"base", print_cell(c.basis)}};
}

std::string polygraph_to_text(const Polygraph& s, bool unicode) {
    std::string out;
    for (int d = 0; d <= s.max_dim(); ++d) {
        for (const auto& k : s.generators(d)) {
            out += k.to_string(unicode);
            if (d >= 1) {
                out += " : ";
                out += print_cell(s.src(k), unicode);
                out += " -> ";
                out += print_cell(s.tgt(k), unicode);
            }
            out += '\n';
        }
    }
    return out;
}

} // namespace orientalis
