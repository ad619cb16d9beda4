#include "quadrilift/json_io.hpp"

#include "quadrilift/error.hpp"

namespace quadrilift {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InputError("expected a rational as a string or integer, got " + j.dump());
}

QuadraticSpace space_from_json(const Json& j) {
    const Json* entries = &j;
    if (j.is_object()) {
        if (!j.contains("diag")) throw InputError("quadratic space needs a \"diag\" array");
        entries = &j.at("diag");
    }
    if (!entries->is_array()) throw InputError("quadratic space diagonal must be an array");
    std::vector<Rational> diag;
    for (const auto& e : *entries) diag.push_back(rational_from_json(e));
    return QuadraticSpace(diag);
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
    std::vector<Vector> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError("matrix rows must be arrays");
        Vector r;
        for (const auto& e : row) r.push_back(rational_from_json(e));
        if (!rows.empty() && r.size() != rows[0].size()) throw InputError("matrix rows have different lengths");
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(rows);
}

GlobalQuadCharacter character_from_json(const Json& j, std::size_t default_dim) {
    if (!j.is_object()) throw InputError("character must be an object");
    GlobalQuadCharacter chi;
    chi.dim = default_dim;
    if (j.contains("lambda")) chi.lambda = SquareClass(rational_from_json(j.at("lambda")));
    if (j.contains("dim")) {
        if (!j.at("dim").is_number_unsigned()) throw InputError("character dim must be a positive integer");
        chi.dim = j.at("dim").get<std::size_t>();
    }
    if (j.contains("eps")) {
        const Json& e = j.at("eps");
        auto sign = [](const Json& v) {
            if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
                throw InputError("eps values must be 1 or -1");
            }
            return v.get<int>();
        };
        if (e.is_object()) {
            for (const auto& [place, v] : e.items()) chi.eps[Place::parse(place)] = sign(v);
        } else if (sign(e) == -1) {
            throw InputError("a global eps must be given per place; a constant eps = -1 is ambiguous");
        }
    }
    return chi;
}

GlobalQuadruple quadruple_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("quadruple must be an object");
    for (const char* key : {"q", "qp"}) {
        if (!j.contains(key)) throw InputError(std::string("quadruple is missing \"") + key + "\"");
    }
    const QuadraticSpace q = space_from_json(j.at("q"));
    const QuadraticSpace qp = space_from_json(j.at("qp"));
    std::size_t n = std::min(q.dim(), qp.dim());
    if (j.contains("n")) {
        if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() == 0) {
            throw InputError("n must be a positive integer");
        }
        n = j.at("n").get<std::size_t>();
    }
    const bool has_xi = j.contains("xi");
    const bool has_xip = j.contains("xip");
    if (has_xi != has_xip) throw InputError("give both characters or neither");
    if (!has_xi) return construct_global(q, qp, n);
    return {q, character_from_json(j.at("xi"), q.dim()), qp, character_from_json(j.at("xip"), qp.dim()), n};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Rational& x) { return x.to_string(); }

Json to_json(const QuadraticSpace& q) {
    Json diag = Json::array();
    for (const auto& a : q.diag()) diag.push_back(to_json(a));
    return Json{{"diag", diag}};
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const GlobalQuadCharacter& chi) {
    Json eps = Json::object();
    for (const auto& [place, sign] : chi.eps) eps[place.to_string()] = sign;
    return Json{{"lambda", chi.lambda.to_string()}, {"eps", eps}, {"dim", chi.dim}};
}

Json to_json(const InvariantTriple& inv) {
    Json hasse = Json::object();
    for (const auto& [place, h] : inv.hasse) hasse[place.to_string()] = h;
    return Json{{"dim", inv.dim}, {"disc", inv.disc.to_string()}, {"hasse", hasse}};
}

Json to_json(const AdmissibilityReport& report) {
    return Json{{"place", report.place.to_string()},
                {"cc", report.cc},
                {"fc", report.fc},
                {"represented", report.represented_classes},
                {"represented_prime", report.represented_classes_prime},
                {"admissible", report.verdict}};
}

}  // namespace quadrilift
