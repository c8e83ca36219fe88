#include "hopfforge/presentation_io.hpp"

#include <fstream>

#include "hopfforge/parser.hpp"

namespace hopfforge {

HopfData load_presentation(const nlohmann::json& j) {
    HopfData data;
    int p = j.at("field").at("p").get<int>();
    std::set<long> orders;
    if (j.at("field").contains("orders"))
        for (auto& n : j.at("field").at("orders")) orders.insert(n.get<long>());
    data.field = FieldCtx::make(p, orders);

    for (auto& g : j.at("generators")) {
        data.gens.names.push_back(g.at("name").get<std::string>());
        data.gens.weights.push_back(g.value("weight", 0));
    }

    ExprEnv env{data.field.get(), &data.gens, {}};
    env.scalars["w"] = data.field->generator();
    for (long n : orders) {
        if (!env.scalars.count("xi")) env.scalars["xi"] = data.field->root(n);
        env.scalars["root" + std::to_string(n)] = data.field->root(n);
    }
    if (j.at("field").contains("scalars"))
        for (auto& [name, expr] : j.at("field").at("scalars").items())
            env.scalars[name] = parse_scalar(expr.get<std::string>(), env);

    int i = 0;
    for (auto& g : j.at("generators")) {
        if (g.value("grouplike", false)) {
            long order = g.at("order").get<long>();
            data.grouplike_gens.push_back(i);
            data.grouplike_orders[i] = order;
            data.coproduct[i] =
                TensorPoly::from_key(data.field.get(), {word_of(i), word_of(i)},
                                     data.field->one());
            data.counit[i] = data.field->one();
            data.relations.push_back(
                NcPoly::from_word(data.field.get(), word_of(i, static_cast<int>(order)),
                                  data.field->one()) -
                NcPoly::unit(data.field.get()));
        }
        ++i;
    }
    for (auto& expr : j.at("relations"))
        data.relations.push_back(parse_expr(expr.get<std::string>(), env));
    if (j.contains("coproduct"))
        for (auto& [name, expr] : j.at("coproduct").items())
            data.coproduct[data.gens.index(name)] =
                parse_tensor_expr(expr.get<std::string>(), env);
    if (j.contains("counit"))
        for (auto& [name, expr] : j.at("counit").items())
            data.counit[data.gens.index(name)] = parse_scalar(expr.get<std::string>(), env);
    for (int gi = 0; gi < data.gens.arity(); ++gi) {
        if (!data.coproduct.count(gi))
            throw Error("generator " + data.gens.names[static_cast<size_t>(gi)] +
                        " has no coproduct assignment");
        if (!data.counit.count(gi)) data.counit[gi] = data.field->zero();
    }
    return data;
}

HopfData load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open presentation file: " + path);
    nlohmann::json j;
    in >> j;
    return load_presentation(j);
}

nlohmann::ordered_json save_presentation(const HopfData& data) {
    nlohmann::ordered_json j;
    j["field"]["p"] = data.field->p();
    j["field"]["orders"] = data.field->registered_orders();
    auto gens = nlohmann::ordered_json::array();
    for (int i = 0; i < data.gens.arity(); ++i) {
        nlohmann::ordered_json g;
        g["name"] = data.gens.names[static_cast<size_t>(i)];
        g["weight"] = data.gens.weights[static_cast<size_t>(i)];
        if (data.grouplike_orders.count(i)) {
            g["grouplike"] = true;
            g["order"] = data.grouplike_orders.at(i);
        }
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    auto rels = nlohmann::ordered_json::array();
    for (size_t ri = 0; ri < data.relations.size(); ++ri) {
        // Skip the group-power relations that load_presentation regenerates.
        bool is_power = false;
        for (auto& [gi, order] : data.grouplike_orders) {
            NcPoly powrel =
                NcPoly::from_word(data.field.get(), word_of(gi, static_cast<int>(order)),
                                  data.field->one()) -
                NcPoly::unit(data.field.get());
            if (data.relations[ri] == powrel) is_power = true;
        }
        if (!is_power) rels.push_back(data.relations[ri].to_string(data.gens));
    }
    j["relations"] = std::move(rels);
    nlohmann::ordered_json cop;
    for (auto& [gi, t] : data.coproduct)
        if (!data.grouplike_orders.count(gi))
            cop[data.gens.names[static_cast<size_t>(gi)]] = t.to_string(data.gens);
    j["coproduct"] = std::move(cop);
    nlohmann::ordered_json cu;
    for (auto& [gi, c] : data.counit)
        if (!data.grouplike_orders.count(gi))
            cu[data.gens.names[static_cast<size_t>(gi)]] = data.field->to_string(c);
    j["counit"] = std::move(cu);
    return j;
}

}  // namespace hopfforge
