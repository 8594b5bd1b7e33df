#include "qclaw/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qclaw {

bool GoldenReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

std::string golden_dir() {
    if (const char* env = std::getenv("QCLAW_GOLDEN_DIR")) return env;
    return QCLAW_GOLDEN_DIR;
}

Json load_golden(const std::string& name) {
    const std::string path = golden_dir() + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw Error("MissingFixture", path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error("ParseError", path + ": " + e.what());
    }
}

IntMatrix quiver_matrix(const IndexSet& index, const std::vector<std::pair<int, int>>& arrows) {
    IntMatrix B = IntMatrix::Zero(index.size(), static_cast<Eigen::Index>(index.unfrozen().size()));
    for (auto [i, j] : arrows) {
        const int pi = index.position(i);
        const int pj = index.position(j);
        if (index.column(pj) >= 0) B(pi, index.column(pj)) += 1;
        if (index.column(pi) >= 0) B(pj, index.column(pi)) -= 1;
    }
    return B;
}

std::vector<SignedWord> longest_pair_corpus(const std::string& type) {
    if (type == "A1") return shuffles(1, {1}, {1});
    if (type != "A2") throw Error("UnknownCorpus", type);
    std::vector<SignedWord> out = shuffles(2, {1, 2, 1}, {1, 2, 1});
    out.emplace_back(2, std::vector<int>{1, 2, 1, -2, -1, -2});
    out.emplace_back(2, std::vector<int>{2, 1, 2, -1, -2, -1});
    out.emplace_back(2, std::vector<int>{2, 1, 2, -2, -1, -2});
    return out;
}

QuantumSeed named_seed(const std::string& name) {
    int n = 0;
    bool frozen = false;
    if (name == "A2f" || name == "A3f") {
        n = name[1] - '0';
        frozen = true;
    } else if (name == "A4") {
        n = 4;
    } else {
        throw Error("UnknownSeed", name);
    }
    std::vector<int> labels;
    for (int i = 1; i <= n + (frozen ? 1 : 0); ++i) labels.push_back(i);
    IndexSet index(labels, frozen ? std::vector<int>{n + 1} : std::vector<int>{});
    IntMatrix B = IntMatrix::Zero(index.size(), n);
    for (int i = 0; i + 1 < n; ++i) {
        B(i, i + 1) = 1;
        B(i + 1, i) = -1;
    }
    if (frozen) {
        B(n, 0) = 1;
        B(n, n - 1) += 1;
    }
    auto L = find_compatible_lambda(index, B);
    if (!L) throw Error("Incompatible", name);
    return make_seed(index, B, *L, name);
}

namespace {

std::string show(const IntMatrix& m) {
    std::ostringstream os;
    os << m.format(Eigen::IOFormat(Eigen::StreamPrecision, Eigen::DontAlignCols, ",", ";", "", "", "[", "]"));
    return os.str();
}

void add(GoldenReport& r, std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

std::vector<std::pair<int, int>> arrows_of(const Json& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& a : j) out.emplace_back(a[0].get<int>(), a[1].get<int>());
    return out;
}

GoldenReport run_sl3() {
    GoldenReport r{"sl3", {}};
    const Json g = load_golden("sl3");
    const CartanData c = cartan_from_json(g["cartan"]);
    const WeylWord zeta = g["zeta"].get<WeylWord>();
    const WeylWord eta = g["eta"].get<WeylWord>();
    const SignedWord iota = unshuffled_word(c.rank(), zeta, eta);
    add(r, "iota", iota.letters() == g["iota"].get<std::vector<int>>(), iota.to_string());

    const IntMatrix nu = nu_matrix(c, zeta, eta);
    const IntMatrix nuGold = matrix_from_json(g["nu"]);
    add(r, "nu", nu == nuGold, show(nu));

    const IntMatrix L = gy_lambda(c, zeta, eta);
    const IntMatrix LGold = matrix_from_json(g["Lambda"]);
    add(r, "Lambda", L == LGold, show(L));
    for (const auto& e : g["Lambda_entries"]) {
        const int k = e["k"].get<int>();
        const int j = e["j"].get<int>();
        add(r, "Lambda_" + std::to_string(k) + std::to_string(j), L(k - 1, j - 1) == e["value"].get<Int>(),
            std::to_string(L(k - 1, j - 1)));
    }

    const IndexSet index = word_index(iota, true);
    add(r, "frozen", index.frozen_labels() == g["frozen"].get<std::vector<int>>());
    const IntMatrix B = -build_B_matrix(iota, c, true);
    const IntMatrix BGold = quiver_matrix(index, arrows_of(g["arrows"]));
    add(r, "quiver", B == BGold, show(B));

    const IntVector d = check_compatible_pair(index, BGold, LGold);
    add(r, "compatible", d == vector_from_json(g["compatibility_d"]), show(d.transpose()));

    const QuantumSeed op = make_seed(index, BGold, LGold, "sl3 op");
    const int k = g["exchange"]["vertex"].get<int>();
    const QuantumSeed mu = mutate_seed(op, k);
    const TorusElement product = op.var(k) * mu.var(k);
    const TorusElement expected = torus_from_json(g["exchange"]["product"], op.reference());
    add(r, "exchange", product == expected, to_json(product).dump());
    add(r, "mutated_quiver", mu.B == quiver_matrix(index, arrows_of(g["mutated_arrows"])), show(mu.B));

    const QuantumSeed sdot = unshuffled_seed(c, zeta, eta);
    const IntervalTable t = find_interval_variables(sdot, iota, 8);
    bool degOk = true;
    for (const auto& e : g["interval_degrees"])
        degOk = degOk && t.entries.count({e["j"].get<int>(), e["k"].get<int>()}) &&
                t.degrees.at({e["j"].get<int>(), e["k"].get<int>()}) == vector_from_json(e["degree"]);
    add(r, "interval_variables", degOk && t.entries.size() == interval_pairs(iota).size(),
        std::to_string(t.entries.size()) + " entries");
    return r;
}

GoldenReport run_a1() {
    GoldenReport r{"a1", {}};
    const Json g = load_golden("a1");
    const CartanData c = cartan_from_json(g["cartan"]);
    const SignedWord w(c.rank(), g["word"].get<std::vector<int>>());
    const BZSeed s = build_bz_seed(c, w);
    add(r, "labels", s.seed.index.labels() == g["labels"].get<std::vector<int>>());
    add(r, "frozen", s.seed.index.frozen_labels() == g["frozen"].get<std::vector<int>>());
    bool wOk = true;
    for (int label : s.seed.index.labels()) {
        const Json& e = g["weights"][std::to_string(label)];
        wOk = wOk && s.weight(label) == WeightLabel{vector_from_json(e["gamma"]), vector_from_json(e["delta"])};
    }
    add(r, "weights", wOk);
    add(r, "B", s.seed.B == matrix_from_json(g["B"]), show(s.seed.B));
    add(r, "Lambda", s.seed.Lambda && *s.seed.Lambda == matrix_from_json(g["Lambda"]), show(s.seed.lambda_or_zero()));
    const Json& f = g["flip"];
    const int k = f["k"].get<int>();
    const QPowerReport q = verify_flip_qpowers(s, k);
    add(r, "qpowers", q.pass() && q.alpha2 == 2 * f["alpha"].get<int>() && q.beta2 == 2 * f["beta"].get<int>(),
        "alpha2=" + std::to_string(q.alpha2) + " beta2=" + std::to_string(q.beta2));
    const BZFlip fl = flip_bz(s, k);
    add(r, "flip_label",
        std::holds_alternative<MutateMove>(fl.move) &&
            fl.seed.weight(k) == WeightLabel{vector_from_json(f["new_gamma"]), vector_from_json(f["new_delta"])},
        fl.seed.weight(k).key());
    return r;
}

GoldenReport run_a2() {
    GoldenReport r{"a2", {}};
    const CartanData c = CartanData::preset("A2");
    int positions = 0;
    bool allPass = true;
    for (const auto& w : longest_pair_corpus("A2")) {
        const BZSeed s = build_bz_seed(c, w);
        for (int k : admissible_flip_positions(w)) {
            ++positions;
            const QPowerReport q = verify_flip_qpowers(s, k);
            if (!q.pass()) {
                allPass = false;
                add(r, "qpowers " + w.to_string() + " k=" + std::to_string(k), false,
                    "alpha2=" + std::to_string(q.alpha2) + " beta2=" + std::to_string(q.beta2));
            }
        }
    }
    add(r, "qpowers", allPass && positions > 0, std::to_string(positions) + " positions");
    const BZSeed s = build_bz_seed(c, SignedWord(2, {1, 2, 1, -1, -2, -1}));
    const IntVector d = check_compatible_pair(s.seed.index, s.seed.B, *s.seed.Lambda);
    add(r, "compatible", (d.array() == 2).all(), show(d.transpose()));
    return r;
}

} // namespace

GoldenReport run_golden(const std::string& suite) {
    if (suite == "sl3") return run_sl3();
    if (suite == "a1") return run_a1();
    if (suite == "a2") return run_a2();
    throw Error("UnknownSuite", suite);
}

Json to_json(const GoldenReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

} // namespace qclaw
