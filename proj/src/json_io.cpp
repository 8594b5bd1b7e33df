#include "qclaw/json_io.hpp"

#include <limits>

namespace qclaw {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("ParseError", what); }

} // namespace

Json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            bad("integer string " + j.get<std::string>());
        }
    }
    bad("expected an integer");
}

Json to_json(const Coefficient& c) {
    Json out = Json::array();
    for (const auto& [e, v] : c.terms()) out.push_back(Json::array({e, bigint_to_json(v)}));
    return out;
}

Coefficient coefficient_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return Coefficient(bigint_from_json(j));
    if (!j.is_array()) bad("coefficient must be an array");
    Coefficient c;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) bad("coefficient term must be [halfExp, c]");
        c += Coefficient::monomial(t[0].get<int>(), bigint_from_json(t[1]));
    }
    return c;
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

IntVector vector_from_json(const Json& j) {
    if (!j.is_array()) bad("expected an integer array");
    IntVector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) bad("expected an integer array");
        v(i) = j[i].get<Int>();
    }
    return v;
}

Json to_json(const TorusElement& z) {
    Json out = Json::array();
    for (const auto& t : z.terms()) out.push_back({{"m", to_json(t.exponent)}, {"c", to_json(t.coeff)}});
    return out;
}

TorusElement torus_from_json(const Json& j, const ContextPtr& ctx) {
    if (!j.is_array()) bad("torus element must be an array");
    TorusElement z = TorusElement::zero(ctx);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("m") || !t.contains("c")) bad("term must have \"m\" and \"c\"");
        IntVector m = vector_from_json(t["m"]);
        if (m.size() != ctx->dimension()) bad("exponent has wrong length");
        z += TorusElement::monomial(ctx, m, coefficient_from_json(t["c"]));
    }
    return z;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).transpose())));
    return out;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    if (j.empty()) return IntMatrix(0, 0);
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    IntMatrix m(j.size(), cols);
    for (size_t i = 0; i < j.size(); ++i) {
        IntVector r = vector_from_json(j[i]);
        if (static_cast<size_t>(r.size()) != cols) bad("ragged matrix");
        m.row(i) = r.transpose();
    }
    return m;
}

Json to_json(const QuantumSeed& s) {
    Json vars = Json::object();
    for (int p = 0; p < s.size(); ++p) vars[std::to_string(s.index.label(p))] = to_json(s.vars[p]);
    Json out = {{"labels", s.index.labels()},
                {"frozen", s.index.frozen_labels()},
                {"B", to_json(s.B)},
                {"Lambda", s.Lambda ? to_json(*s.Lambda) : Json(nullptr)},
                {"vars", vars},
                {"name", s.name}};
    const IntMatrix& ref = s.reference()->lambda();
    if (!(ref.rows() == s.size() && ref == s.lambda_or_zero())) out["reference_Lambda"] = to_json(ref);
    return out;
}

QuantumSeed seed_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("B")) bad("seed needs \"labels\" and \"B\"");
    std::vector<int> labels = j["labels"].get<std::vector<int>>();
    std::vector<int> frozen = j.value("frozen", std::vector<int>{});
    IndexSet index(labels, frozen);
    IntMatrix B = matrix_from_json(j["B"]);
    if (B.size() == 0) B = IntMatrix::Zero(index.size(), static_cast<Eigen::Index>(index.unfrozen().size()));
    std::optional<IntMatrix> L;
    if (j.contains("Lambda") && !j["Lambda"].is_null()) L = matrix_from_json(j["Lambda"]);
    QuantumSeed s = make_seed(index, B, L, j.value("name", std::string{}));
    if (j.contains("vars")) {
        const Json& vars = j["vars"];
        if (!vars.is_object()) bad("\"vars\" must be an object");
        ContextPtr ctx = j.contains("reference_Lambda") ? TorusContext::make(matrix_from_json(j["reference_Lambda"]))
                                                        : s.reference();
        for (int p = 0; p < s.size(); ++p) {
            const std::string key = std::to_string(s.index.label(p));
            if (!vars.contains(key)) bad("missing variable " + key);
            s.vars[p] = torus_from_json(vars[key], ctx);
        }
        validate_seed(s);
    }
    return s;
}

Json to_json(const MutationPath& p) {
    Json out = Json::array();
    for (const auto& mv : p) {
        if (const auto* m = std::get_if<MutateMove>(&mv)) {
            out.push_back({{"mutate", m->vertex}});
        } else {
            Json pairs = Json::array();
            for (const auto& [a, b] : std::get<PermuteMove>(mv).sigma) pairs.push_back({a, b});
            out.push_back({{"permute", pairs}});
        }
    }
    return out;
}

MutationPath path_from_json(const Json& j) {
    if (!j.is_array()) bad("path must be an array");
    MutationPath p;
    for (const auto& mv : j) {
        if (mv.is_object() && mv.contains("mutate") && mv["mutate"].is_number_integer()) {
            p.push_back(MutateMove{mv["mutate"].get<int>()});
        } else if (mv.is_object() && mv.contains("permute") && mv["permute"].is_array()) {
            Permutation sigma;
            for (const auto& pr : mv["permute"]) {
                if (!pr.is_array() || pr.size() != 2) bad("permute entries are [i, sigma(i)]");
                sigma[pr[0].get<int>()] = pr[1].get<int>();
            }
            p.push_back(PermuteMove{sigma});
        } else {
            bad("path step must be {\"mutate\": k} or {\"permute\": [...]}");
        }
    }
    return p;
}

Json to_json(const CartanData& c) { return {{"C", to_json(c.C)}, {"d", to_json(c.d)}}; }

CartanData cartan_from_json(const Json& j) {
    if (j.is_string()) return CartanData::preset(j.get<std::string>());
    if (!j.is_object() || !j.contains("C") || !j.contains("d")) bad("cartan needs \"C\" and \"d\"");
    CartanData c{matrix_from_json(j["C"]), vector_from_json(j["d"])};
    c.validate();
    return c;
}

Json to_json(const SignedWord& w) { return w.letters(); }

Json to_json(const WeightLabel& w) { return {{"gamma", to_json(w.gamma)}, {"delta", to_json(w.delta)}}; }

Json to_json(const BZSeed& s) {
    Json weights = Json::object();
    for (int p = 0; p < s.seed.size(); ++p) weights[std::to_string(s.seed.index.label(p))] = to_json(s.weights[p]);
    return {{"cartan", to_json(s.cartan)},
            {"word", to_json(s.word)},
            {"u", s.u},
            {"w", s.w},
            {"seed", to_json(s.seed)},
            {"weights", weights}};
}

Json to_json(const MultiIndex& c) { return Json(std::vector<int>(c)); }

Json to_json(const StandardExpansion& e) {
    Json out = Json::array();
    for (const auto& [c, a] : e) out.push_back({{"c", to_json(c)}, {"coeff", to_json(a)}});
    return out;
}

} // namespace qclaw
