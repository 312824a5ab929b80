#include "gct/json_io.hpp"

#include <stdexcept>

namespace gct {

namespace {

const Int kJsonIntMax = (Int(1) << 53);

std::vector<int> small_ints_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an integer array");
    std::vector<int> v;
    for (const auto& x : j) v.push_back(x.get<int>());
    return v;
}

}  // namespace

Json int_to_json(const Int& v) {
    if (abs(v) <= kJsonIntMax) return Json(v.convert_to<long long>());
    return Json(v.str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or string)");
}

Json rat_to_json(const Rat& v) { return Json(rat_str(v)); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected a rational (\"p/q\" string or integer)");
}

Json to_json(const Partition& p) {
    Json a = Json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

Partition partition_from_json(const Json& j) { return Partition(small_ints_from_json(j)); }

Json to_json(const Tableau& t) {
    Json j;
    j["outer"] = to_json(t.shape().outer);
    j["inner"] = to_json(t.shape().inner);
    Json rows = Json::array();
    for (const auto& r : t.rows()) {
        Json row = Json::array();
        for (int v : r) row.push_back(v);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Tableau tableau_from_json(const Json& j) {
    SkewShape shape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
    std::vector<std::vector<int>> rows;
    for (const auto& r : j.at("rows")) rows.push_back(small_ints_from_json(r));
    return Tableau(std::move(shape), std::move(rows));
}

Json int_vector_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec int_vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array");
    IntVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

Json int_matrix_to_json(const IntMat& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(int_vector_to_json(row));
    return a;
}

IntMat int_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of arrays)");
    IntMat m;
    for (const auto& row : j) m.push_back(int_vector_from_json(row));
    return m;
}

Json rat_matrix_to_json(const RatMat& m) {
    Json a = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Rat& x : row) r.push_back(rat_to_json(x));
        a.push_back(std::move(r));
    }
    return a;
}

RatMat rat_matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of arrays)");
    RatMat m;
    for (const auto& row : j) {
        RatVec r;
        for (const auto& x : row) r.push_back(rat_from_json(x));
        m.push_back(std::move(r));
    }
    return m;
}

Json to_json(const RationalPolytope& P) {
    Json j;
    j["A"] = int_matrix_to_json(P.A);
    j["b"] = int_vector_to_json(P.b);
    j["nonneg"] = P.nonneg;
    return j;
}

RationalPolytope polytope_from_json(const Json& j) {
    return RationalPolytope(int_matrix_from_json(j.at("A")), int_vector_from_json(j.at("b")),
                            j.value("nonneg", false));
}

Json to_json(const Quasipolynomial& q) {
    Json j;
    j["period"] = q.period();
    Json cs = Json::array();
    for (const auto& f : q.coefficients()) {
        Json c = Json::array();
        for (const Rat& x : f) c.push_back(rat_to_json(x));
        cs.push_back(std::move(c));
    }
    j["coeffs"] = std::move(cs);
    return j;
}

Quasipolynomial quasipolynomial_from_json(const Json& j) {
    std::vector<RatVec> coeffs;
    for (const auto& f : j.at("coeffs")) {
        RatVec c;
        for (const auto& x : f) c.push_back(rat_from_json(x));
        coeffs.push_back(std::move(c));
    }
    return Quasipolynomial(j.at("period").get<int>(), std::move(coeffs));
}

Json to_json(const SmithDecomposition& s) {
    Json j;
    j["U"] = int_matrix_to_json(s.U);
    j["S"] = int_matrix_to_json(s.S);
    j["V"] = int_matrix_to_json(s.V);
    return j;
}

Json to_json(const CharacterTable& t) {
    Json j;
    j["n"] = t.n;
    Json parts = Json::array();
    for (const auto& p : t.partitions) parts.push_back(to_json(p));
    j["partitions"] = std::move(parts);
    Json cts = Json::array();
    for (const auto& c : t.cycle_types) {
        Json m = Json::array();
        for (int x : c.multiplicities()) m.push_back(x);
        cts.push_back(std::move(m));
    }
    j["cycle_types"] = std::move(cts);
    j["values"] = int_matrix_to_json(t.values);
    return j;
}

Json to_json(const Polynomial& p) {
    Json j;
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        Json exp = Json::array();
        for (int x : e) exp.push_back(x);
        t["exp"] = std::move(exp);
        t["coeff"] = rat_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(small_ints_from_json(t.at("exp")), rat_from_json(t.at("coeff")));
    return p;
}

Json to_json(const BracketPolynomial& p) {
    // Monomial key as the compact JSON text of its index arrays.
    Json j = Json::object();
    for (const auto& [m, c] : p.terms()) {
        Json key = Json::array();
        for (const Bracket& b : m) {
            Json idx = Json::array();
            for (int x : b.indices) idx.push_back(x);
            key.push_back(std::move(idx));
        }
        j[key.dump()] = rat_to_json(c);
    }
    return j;
}

BracketPolynomial bracket_polynomial_from_json(const Json& j) {
    BracketPolynomial p;
    for (const auto& [key, val] : j.items()) {
        Json m = Json::parse(key);
        BracketMonomial mono;
        Rat sign(1);
        for (const auto& idx : m) {
            auto [b, s] = canonicalize_bracket(small_ints_from_json(idx));
            if (s == 0) { sign = 0; break; }
            sign *= s;
            mono.push_back(std::move(b));
        }
        if (sign != 0) p.add_term(std::move(mono), sign * rat_from_json(val));
    }
    return p;
}

Json weights_to_json(const std::vector<WeightVector>& ws) {
    Json a = Json::array();
    for (const auto& w : ws) {
        Json r = Json::array();
        for (int x : w.components) r.push_back(x);
        a.push_back(std::move(r));
    }
    return a;
}

std::vector<WeightVector> weights_from_json(const Json& j) {
    std::vector<WeightVector> ws;
    for (const auto& r : j) ws.push_back(WeightVector{small_ints_from_json(r)});
    return ws;
}

LRInstance lr_instance_from_json(const Json& j) {
    return {partition_from_json(j.at("alpha")), partition_from_json(j.at("beta")),
            partition_from_json(j.at("gamma"))};
}

}  // namespace gct
