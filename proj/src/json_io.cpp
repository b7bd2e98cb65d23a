#include "leibniz/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace leibniz {

Json field_to_json(const FieldSpec& f) {
    Json j;
    switch (f.kind) {
        case FieldKind::Prime:
            j["kind"] = "prime";
            j["p"] = f.p;
            break;
        case FieldKind::Rationals:
            j["kind"] = "rational";
            break;
        case FieldKind::RationalFunction:
            j["kind"] = "rational_function";
            j["p"] = f.p;
            j["variable"] = f.variable;
            break;
    }
    return j;
}

FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("field descriptor must be an object with a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::int64_t>());
    if (kind == "rational") return FieldSpec::rationals();
    if (kind == "rational_function")
        return FieldSpec::rational_function(j.at("p").get<std::int64_t>(),
                                            j.value("variable", std::string("t")));
    throw ParseError("unknown field kind '" + kind + "'");
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["name"] = a.name();
    j["field"] = field_to_json(a.field());
    j["basis"] = a.basis_names();
    Json brackets = Json::object();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            Json entry = Json::object();
            for (std::size_t l = 0; l < a.dim(); ++l)
                if (!a.tensor(i, k, l).is_zero())
                    entry[a.basis_names()[l]] = a.tensor(i, k, l).to_string();
            if (!entry.empty())
                brackets[a.basis_names()[i] + "," + a.basis_names()[k]] = std::move(entry);
        }
    j["brackets"] = std::move(brackets);
    return j;
}

Algebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    FieldSpec f = field_from_json(j.at("field"));
    if (!j.contains("basis") || !j.at("basis").is_array())
        throw ParseError("algebra file needs a 'basis' array");
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    Algebra a(f, basis, j.value("name", std::string{}));
    if (!j.contains("brackets")) return a;
    for (const auto& [key, value] : j.at("brackets").items()) {
        std::size_t comma = key.find(',');
        if (comma == std::string::npos)
            throw ParseError("bracket key '" + key + "' is not a 'left,right' pair");
        auto li = a.basis_index(key.substr(0, comma));
        auto ri = a.basis_index(key.substr(comma + 1));
        if (!li || !ri)
            throw ParseError("bracket key '" + key + "' references an unknown basis name");
        for (const auto& [target, scalar_text] : value.items()) {
            auto ti = a.basis_index(target);
            if (!ti)
                throw ParseError("bracket value references unknown basis name '" + target + "'");
            a.set_tensor_entry(*li, *ri, *ti, Scalar::parse(f, scalar_text.get<std::string>()));
        }
    }
    return a;
}

Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

void save_algebra(const Algebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << algebra_to_json(a).dump(2) << "\n";
}

}  // namespace leibniz
