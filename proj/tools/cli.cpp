#include "cli.hpp"

#include "qclaw/compactification.hpp"
#include "qclaw/golden.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace qclaw::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json parse_json(const std::string& text) {
    std::string src = text;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw UsageError("empty JSON argument");
    if (text[first] != '{' && text[first] != '[' && text[first] != '"') {
        std::ifstream in(text);
        if (!in) throw UsageError("cannot read " + text);
        std::stringstream ss;
        ss << in.rdbuf();
        src = ss.str();
    }
    try {
        return Json::parse(src);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" ") == std::string::npos) continue;
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: " + text);
        }
    }
    return out;
}

int max_seeds(int requested) {
    if (const char* env = std::getenv("QCLAW_MAX_SEEDS")) {
        try {
            return std::min(requested, std::stoi(env));
        } catch (const std::exception&) {
            throw UsageError("QCLAW_MAX_SEEDS must be an integer");
        }
    }
    return requested;
}

QuantumSeed load_seed(const std::string& text) {
    const std::string t = text;
    if (t == "A2f" || t == "A3f" || t == "A4") return named_seed(t);
    return seed_from_json(parse_json(t));
}

CartanData load_cartan(const std::string& text) {
    if (!text.empty() && (text[0] == '{' || text.find(".json") != std::string::npos))
        return cartan_from_json(parse_json(text));
    return CartanData::preset(text);
}

/// n/2 as an integer when exact, else "n/2".
Json half(int n) { return n % 2 == 0 ? Json(n / 2) : Json(std::to_string(n) + "/2"); }

struct Options {
    std::string seed = "A2f";
    std::string target;
    std::string cartan = "A2";
    std::string word;
    std::string other;
    std::string to;
    std::string zeta = "1,2,1";
    std::string eta = "1,2,1";
    std::string c;
    std::string order = "lex";
    std::string element;
    std::string freeze;
    std::string B;
    std::string lambda;
    std::string labels;
    std::string frozen;
    std::vector<int> at;
    int k = 0;
    int j = 0;
    int depth = 12;
    int maxSeeds = 2000;
    int samples = 100;
    int drop = 0;
    bool permutations = false;
    bool modPermutation = false;
    bool dotted = false;
    std::uint64_t rngSeed = kDefaultRngSeed;
    std::string output;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum cluster seeds, signed words and bases"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--rng-seed", o.rngSeed, "Seed of the random generator");
    app.add_option("--output", o.output, "Write the JSON result to this file");

    Json result;
    int status = 0;
    std::function<void()> action;
    auto bind = [&](CLI::App* cmd, std::function<void()> f) { cmd->callback([&action, f] { action = f; }); };
    auto requireWord = [&](CLI::App* cmd, std::string& dst, const std::string& name) {
        cmd->add_option(name, dst, "Signed word, e.g. 1,2,-1")->required();
    };

    auto* seed = app.add_subcommand("seed", "Seed construction and mutation")->require_subcommand(1);
    {
        auto* build = seed->add_subcommand("build", "Build a seed from B and an optional Lambda");
        build->add_option("--B", o.B, "Exchange matrix as JSON rows")->required();
        build->add_option("--lambda", o.lambda, "Lambda as JSON rows, or 'auto'");
        build->add_option("--labels", o.labels, "Vertex labels, default 1..n");
        build->add_option("--frozen", o.frozen, "Frozen labels");
        bind(build, [&] {
            const IntMatrix B = matrix_from_json(parse_json(o.B));
            std::vector<int> labels = o.labels.empty() ? std::vector<int>{} : parse_ints(o.labels);
            if (labels.empty())
                for (int i = 1; i <= B.rows(); ++i) labels.push_back(i);
            IndexSet index(labels, o.frozen.empty() ? std::vector<int>{} : parse_ints(o.frozen));
            std::optional<IntMatrix> L;
            if (o.lambda == "auto") {
                L = find_compatible_lambda(index, B);
                if (!L) throw Error("Incompatible", "no compatible Lambda found");
            } else if (!o.lambda.empty()) {
                L = matrix_from_json(parse_json(o.lambda));
            }
            result = to_json(make_seed(index, B, L));
        });

        auto* mutate = seed->add_subcommand("mutate", "Mutate along the given vertices");
        mutate->add_option("--seed", o.seed, "Seed JSON, file, or A2f|A3f|A4");
        mutate->add_option("--at", o.at, "Vertex to mutate (repeatable)")->required();
        bind(mutate, [&] {
            QuantumSeed s = load_seed(o.seed);
            for (int k : o.at) s = mutate_seed(s, k);
            result = to_json(s);
        });

        auto* path = seed->add_subcommand("path", "Search a mutation path between two seeds");
        path->add_option("--seed", o.seed, "Source seed");
        path->add_option("--target", o.target, "Target seed")->required();
        path->add_option("--depth", o.depth, "Maximal depth")->check(CLI::PositiveNumber);
        path->add_flag("--permutations", o.permutations, "Allow a final relabeling");
        bind(path, [&] {
            auto p = find_mutation_path(load_seed(o.seed), load_seed(o.target), o.depth, o.permutations);
            result = {{"found", p.has_value()}, {"path", p ? to_json(*p) : Json(nullptr)}};
            if (!p) status = 1;
        });

        auto* graph = seed->add_subcommand("graph", "Enumerate the exchange graph");
        graph->add_option("--seed", o.seed, "Initial seed");
        graph->add_option("--max-seeds", o.maxSeeds, "Enumeration cap")->check(CLI::PositiveNumber);
        graph->add_flag("--modulo-permutation", o.modPermutation, "Identify relabeled seeds");
        bind(graph, [&] {
            const auto g = enumerate_exchange_graph(load_seed(o.seed), max_seeds(o.maxSeeds), o.modPermutation);
            result = {{"seeds", g.seeds.size()}, {"clusters", count_clusters(g.seeds)}, {"truncated", g.truncated}};
        });
    }

    auto* word = app.add_subcommand("word", "Signed words")->require_subcommand(1);
    {
        auto* bm = word->add_subcommand("bmatrix", "Exchange matrix of a signed word");
        bm->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(bm, o.word, "--word");
        bm->add_flag("--dotted", o.dotted, "Use the positive index set only");
        bind(bm, [&] {
            const CartanData c = load_cartan(o.cartan);
            const SignedWord w = SignedWord::parse(c.rank(), o.word);
            const IndexSet index = word_index(w, o.dotted);
            result = {{"labels", index.labels()},
                      {"frozen", index.frozen_labels()},
                      {"B", to_json(build_B_matrix(w, c, o.dotted))}};
        });

        auto* fl = word->add_subcommand("flip", "Swap letters k, k+1 of opposite signs");
        fl->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(fl, o.word, "--word");
        fl->add_option("--at", o.k, "Position k")->required();
        bind(fl, [&] {
            const auto r = flip(SignedWord::parse(load_cartan(o.cartan).rank(), o.word), o.k);
            result = {{"word", to_json(r.word)}, {"mutation", r.mutation ? Json(*r.mutation) : Json(nullptr)}};
        });

        auto* fp = word->add_subcommand("flip-path", "Flip positions between two shuffles");
        fp->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(fp, o.word, "--word");
        requireWord(fp, o.to, "--to");
        bind(fp, [&] {
            const int r = load_cartan(o.cartan).rank();
            result = {{"flips", flip_path(SignedWord::parse(r, o.word), SignedWord::parse(r, o.to))}};
        });
    }

    auto* bz = app.add_subcommand("bz", "Berenstein-Zelevinsky seeds")->require_subcommand(1);
    {
        auto* b = bz->add_subcommand("build", "Build the seed of a signed word");
        b->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(b, o.word, "--word");
        bind(b, [&] {
            const CartanData c = load_cartan(o.cartan);
            result = to_json(build_bz_seed(c, SignedWord::parse(c.rank(), o.word)));
        });

        auto* f = bz->add_subcommand("flip", "Flip at position k");
        f->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(f, o.word, "--word");
        f->add_option("--at", o.k, "Position k")->required();
        bind(f, [&] {
            const CartanData c = load_cartan(o.cartan);
            const BZFlip r = flip_bz(build_bz_seed(c, SignedWord::parse(c.rank(), o.word)), o.k);
            result = {{"seed", to_json(r.seed)}, {"move", to_json(MutationPath{r.move})}};
        });

        auto* q = bz->add_subcommand("verify-qpowers", "Exchange q-powers of flip mutations");
        q->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(q, o.word, "--word");
        q->add_option("--at", o.at, "Positions, default all (m,-m) positions");
        bind(q, [&] {
            const CartanData c = load_cartan(o.cartan);
            const SignedWord w = SignedWord::parse(c.rank(), o.word);
            const BZSeed s = build_bz_seed(c, w);
            std::vector<int> ks = o.at.empty() ? admissible_flip_positions(w) : o.at;
            result = Json::array();
            for (int k : ks) {
                const QPowerReport r = verify_flip_qpowers(s, k);
                result.push_back({{"k", k},
                                  {"alpha", half(r.alpha2)},
                                  {"beta", half(r.beta2)},
                                  {"relation_holds", r.relation_holds},
                                  {"frozen_term_matches", r.frozen_term_matches},
                                  {"pass", r.pass()}});
                if (!r.pass()) status = 1;
            }
        });

        auto* cn = bz->add_subcommand("connect", "Mutation path between the seeds of two words");
        cn->add_option("--cartan", o.cartan, "Cartan preset or JSON");
        requireWord(cn, o.word, "--word");
        requireWord(cn, o.other, "--other");
        cn->add_option("--depth", o.depth, "Maximal depth")->check(CLI::PositiveNumber);
        bind(cn, [&] {
            const CartanData c = load_cartan(o.cartan);
            const BZSeed a = build_bz_seed(c, SignedWord::parse(c.rank(), o.word));
            const BZSeed b = build_bz_seed(c, SignedWord::parse(c.rank(), o.other));
            auto p = connect_bz(a, b, o.depth);
            const bool ok = p && bz_path_reaches(a, *p, b);
            result = {{"found", ok}, {"path", p ? to_json(*p) : Json(nullptr)}};
            if (!ok) status = 1;
        });
    }

    auto* bases = app.add_subcommand("bases", "Standard and triangular bases")->require_subcommand(1);
    {
        auto addWords = [&](CLI::App* cmd) {
            cmd->add_option("--cartan", o.cartan, "Cartan preset or JSON");
            cmd->add_option("--zeta", o.zeta, "Reduced word zeta");
            cmd->add_option("--eta", o.eta, "Reduced word eta");
            cmd->add_option("--depth", o.depth, "Search depth for interval variables")->check(CLI::PositiveNumber);
        };
        auto table = [&] {
            const CartanData c = load_cartan(o.cartan);
            const WeylWord zeta = parse_ints(o.zeta);
            const WeylWord eta = parse_ints(o.eta);
            return find_interval_variables(unshuffled_seed(c, zeta, eta), unshuffled_word(c.rank(), zeta, eta),
                                           o.depth);
        };
        auto multi = [&](const StandardBasis& b) {
            std::vector<int> c = parse_ints(o.c);
            if (static_cast<int>(c.size()) != b.length()) throw UsageError("--c needs one entry per letter");
            return MultiIndex(c);
        };

        auto* iv = bases->add_subcommand("intervals", "Interval variables W_[j,k]");
        addWords(iv);
        bind(iv, [&] {
            const IntervalTable t = table();
            result = Json::array();
            for (const auto& [jk, e] : t.entries)
                result.push_back({{"j", jk.first},
                                  {"k", jk.second},
                                  {"degree", to_json(t.degrees.at(jk))},
                                  {"element", to_json(e)}});
        });

        auto* st = bases->add_subcommand("standard", "Standard monomial M(c)");
        addWords(st);
        st->add_option("--c", o.c, "Multi-index")->required();
        bind(st, [&] {
            StandardBasis b(table());
            result = to_json(b.monomial(multi(b)));
        });

        auto* kl = bases->add_subcommand("kl", "Triangular basis element C(c)");
        addWords(kl);
        kl->add_option("--c", o.c, "Multi-index")->required();
        kl->add_option("--order", o.order, "lex or rev")->check(CLI::IsMember({"lex", "rev"}));
        bind(kl, [&] {
            StandardBasis b(table());
            result = to_json(b.kl(multi(b), o.order == "lex" ? Order::Lex : Order::Rev));
        });

        auto* sl = bases->add_subcommand("straighten", "Straightening defects W_k W_j - q^lambda W_j W_k");
        addWords(sl);
        sl->add_option("--k", o.k, "k (default: all pairs)");
        sl->add_option("--j", o.j, "j < k");
        bind(sl, [&] {
            StandardBasis b(table());
            std::vector<std::pair<int, int>> pairs;
            if (o.k > 0) {
                pairs.emplace_back(o.k, o.j);
            } else {
                for (int k = 2; k <= b.length(); ++k)
                    for (int j = 1; j < k; ++j) pairs.emplace_back(k, j);
            }
            result = Json::array();
            for (auto [k, j] : pairs) {
                const StraighteningReport r = b.straightening(k, j);
                result.push_back({{"k", k}, {"j", j}, {"supported", r.supported}, {"expansion", to_json(r.expansion)}});
                if (!r.supported) status = 1;
            }
        });
    }

    auto* compact = app.add_subcommand("compact", "Partially compactified algebras")->require_subcommand(1);
    {
        auto* ch = compact->add_subcommand("check", "Membership in the upper cluster algebra");
        ch->add_option("--seed", o.seed, "Seed JSON, file, or A2f|A3f|A4");
        ch->add_option("--element", o.element, "Element JSON in the seed's torus")->required();
        ch->add_option("--max-seeds", o.maxSeeds, "Enumeration cap")->check(CLI::PositiveNumber);
        bind(ch, [&] {
            const QuantumSeed s = with_own_torus(load_seed(o.seed));
            const MembershipReport r = check_membership(torus_from_json(parse_json(o.element), s.reference()), s,
                                                        max_seeds(o.maxSeeds));
            Json per = Json::array();
            for (size_t i = 0; i < r.perSeed.size(); ++i)
                per.push_back({{"seed", i}, {"laurent", r.perSeed[i] ? Json(*r.perSeed[i]) : Json(nullptr)}});
            Json orders = Json::object();
            for (const auto& [j, nu] : r.frozenOrders) orders[std::to_string(j)] = nu;
            result = {{"perSeed", per},
                      {"frozenOrders", orders},
                      {"inU", r.inU},
                      {"inBarU", r.inBarU},
                      {"partial", r.partial}};
        });

        auto* pi = compact->add_subcommand("pi", "Quotient by a non-essential frozen variable");
        pi->add_option("--seed", o.seed, "Seed JSON, file, or A2f|A3f|A4");
        pi->add_option("--freeze", o.freeze, "Unfrozen labels to freeze");
        pi->add_option("--drop", o.drop, "Frozen label j to send to zero")->required();
        pi->add_option("--element", o.element, "Element JSON to map");
        bind(pi, [&] {
            QuantumSeed s = with_own_torus(load_seed(o.seed));
            if (!o.freeze.empty()) s = freeze_vertices(s, parse_ints(o.freeze));
            const QuantumSeed d = delete_vertex(s, o.drop);
            result = {{"seed", to_json(d)}, {"non_essential", is_non_essential(s, o.drop)}};
            if (!o.element.empty())
                result["element"] =
                    to_json(pi_quotient(s, o.drop, torus_from_json(parse_json(o.element), s.reference()), d));
        });

        auto* h = compact->add_subcommand("harness", "Intersection-of-localizations samples");
        h->add_option("--seed", o.seed, "Seed JSON, file, or A2f|A3f|A4");
        h->add_option("--samples", o.samples, "Number of samples")->check(CLI::PositiveNumber);
        h->add_option("--max-seeds", o.maxSeeds, "Enumeration cap")->check(CLI::PositiveNumber);
        bind(h, [&] {
            Rng rng(o.rngSeed);
            const HarnessReport r =
                intersection_harness(with_own_torus(load_seed(o.seed)), o.samples, rng, max_seeds(o.maxSeeds));
            result = {{"samples", r.samples},
                      {"attempts", r.attempts},
                      {"inA", r.inA},
                      {"notDivChecked", r.notDivChecked},
                      {"failures", r.failures},
                      {"pass", r.pass()}};
            if (!r.pass()) status = 1;
        });
    }

    auto* golden = app.add_subcommand("golden", "Worked-example regression suites")->require_subcommand(1);
    for (const char* suite : {"sl3", "a1", "a2"}) {
        auto* g = golden->add_subcommand(suite, std::string("Run the ") + suite + " suite");
        bind(g, [&, suite] {
            const GoldenReport r = run_golden(suite);
            result = to_json(r);
            if (!r.pass()) status = 1;
        });
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    try {
        if (action) action();
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "invalid JSON input: " << e.what() << "\n";
        return 2;
    }
    const std::string text = result.dump(2) + "\n";
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output);
        if (!f) {
            err << "cannot write " << o.output << "\n";
            return 2;
        }
        f << text;
    }
    return status;
}

} // namespace qclaw::cli
