#include "qclaw/bases.hpp"

#include "qclaw/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace qclaw {

SignedWord unshuffled_word(int rank, const WeylWord& zeta, const WeylWord& eta) {
    std::vector<int> letters(zeta.rbegin(), zeta.rend());
    letters.insert(letters.end(), eta.begin(), eta.end());
    return SignedWord(rank, letters);
}

IntMatrix nu_matrix(const CartanData& c, const WeylWord& zeta, const WeylWord& eta) {
    if (!is_reduced(c, zeta) || !is_reduced(c, eta)) throw Error("NotReducedPair", "zeta and eta must be reduced");
    const auto beta = roots_of_word(c, zeta);
    const auto betap = roots_of_word(c, eta);
    const int lw = static_cast<int>(zeta.size());
    const int l = lw + static_cast<int>(eta.size());
    auto bar = [&](int k) { return k <= lw ? lw + 1 - k : k - lw; };
    IntMatrix nu = IntMatrix::Zero(l, l);
    for (int k = 1; k <= l; ++k)
        for (int j = 1; j < k; ++j) {
            Rational v;
            if (k <= lw) {
                v = -weight_pairing(c, beta[bar(k) - 1], beta[bar(j) - 1]);
            } else if (j > lw) {
                v = -weight_pairing(c, betap[bar(k) - 1], betap[bar(j) - 1]);
            } else {
                v = weight_pairing(c, betap[bar(k) - 1], beta[bar(j) - 1]);
            }
            auto iv = to_integer(v);
            if (!iv) throw Error("NonIntegerLambda", "nu entry");
            nu(k - 1, j - 1) = *iv;
            nu(j - 1, k - 1) = -*iv;
        }
    return nu;
}

IntMatrix gy_lambda(const CartanData& c, const WeylWord& zeta, const WeylWord& eta) {
    const IntMatrix nu = nu_matrix(c, zeta, eta);
    const SignedWord iota = unshuffled_word(c.rank(), zeta, eta);
    const int l = iota.length();
    IntMatrix chains = IntMatrix::Zero(l, l);
    for (int k = 1; k <= l; ++k)
        for (int j = iota.min_occurrence(k); j <= k; ++j)
            if (iota.abs_letter(j) == iota.abs_letter(k)) chains(j - 1, k - 1) = 1;
    return chains.transpose() * nu * chains;
}

QuantumSeed unshuffled_seed(const CartanData& c, const WeylWord& zeta, const WeylWord& eta) {
    const SignedWord iota = unshuffled_word(c.rank(), zeta, eta);
    return make_seed(word_index(iota, true), build_B_matrix(iota, c, true), IntMatrix(-gy_lambda(c, zeta, eta)),
                     "S(" + iota.to_string() + ")");
}

std::vector<std::pair<int, int>> interval_pairs(const SignedWord& iota) {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= iota.length(); ++k)
        for (int j = 1; j <= k; ++j)
            if (iota.abs_letter(j) == iota.abs_letter(k)) out.emplace_back(j, k);
    return out;
}

LatticeVector interval_degree(const SignedWord& iota, int j, int k) {
    LatticeVector d = unit_vector(iota.length(), k - 1);
    auto p = iota.prev(j);
    if (p && *p >= 1) d(*p - 1) -= 1;
    return d;
}

IntervalTable find_interval_variables(const QuantumSeed& s, const SignedWord& iota, int maxDepth) {
    if (s.size() != iota.length()) throw Error("DimensionMismatch", "seed and word lengths differ");
    IntervalTable t{iota, s, {}, {}};
    DominanceOrder order(s.B);
    std::unordered_map<std::string, std::pair<int, int>> wanted;
    for (auto [j, k] : interval_pairs(iota)) {
        LatticeVector d = interval_degree(iota, j, k);
        t.degrees[{j, k}] = d;
        wanted[vector_key(d)] = {j, k};
    }
    auto harvest = [&](const QuantumSeed& x) {
        for (const auto& v : x.vars) {
            auto it = wanted.find(vector_key(degree_and_pointedness(v, order).degree));
            if (it != wanted.end() && !t.entries.count(it->second)) t.entries.emplace(it->second, v);
        }
    };
    harvest(s);
    std::deque<std::pair<QuantumSeed, int>> queue{{s, 0}};
    std::unordered_set<std::string> seen{seed_identity(s, true)};
    while (!queue.empty() && t.entries.size() < wanted.size()) {
        auto [x, depth] = std::move(queue.front());
        queue.pop_front();
        if (depth >= maxDepth) continue;
        for (int k : x.index.unfrozen_labels()) {
            QuantumSeed y = mutate_seed(x, k);
            if (!seen.insert(seed_identity(y, true)).second) continue;
            harvest(y);
            queue.emplace_back(std::move(y), depth + 1);
        }
    }
    if (t.entries.size() < wanted.size())
        throw Error("IncompleteTable", "not all interval variables found within depth " + std::to_string(maxDepth));
    return t;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool rev_less(const MultiIndex& a, const MultiIndex& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool order_less(Order o, const MultiIndex& a, const MultiIndex& b) {
    return o == Order::Lex ? lex_less(a, b) : rev_less(a, b);
}

StandardBasis::StandardBasis(IntervalTable table) : table_(std::move(table)), order_(table_.seed.B) {
    for (int k = 1; k <= length(); ++k) gamma_.push_back(table_.degrees.at({k, k}));
}

LatticeVector StandardBasis::degree_of(const MultiIndex& c) const {
    LatticeVector m = LatticeVector::Zero(length());
    for (int k = 1; k <= length(); ++k) m += c.at(k - 1) * gamma(k);
    return m;
}

std::optional<MultiIndex> StandardBasis::multi_index_of(const LatticeVector& m) const {
    const SignedWord& w = table_.iota;
    MultiIndex c(length(), 0);
    for (int k = length(); k >= 1; --k) {
        auto n = w.next(k);
        Int v = m(k - 1) + (n ? c[*n - 1] : 0);
        if (v < 0) return std::nullopt;
        c[k - 1] = static_cast<int>(v);
    }
    return c;
}

const TorusElement& StandardBasis::monomial(const MultiIndex& c) {
    if (static_cast<int>(c.size()) != length()) throw Error("DimensionMismatch", "multi-index length");
    auto it = monomials_.find(c);
    if (it != monomials_.end()) return it->second;
    TorusElement z = TorusElement::one(table_.seed.reference());
    for (int k = 1; k <= length(); ++k) {
        if (c[k - 1] < 0) throw Error("NegativeExponent", "multi-index entries must be >= 0");
        if (c[k - 1] > 0) z = z * power(table_.W(k), c[k - 1]);
    }
    return monomials_.emplace(c, normalize(z, order_)).first->second;
}

namespace {

/// A maximal element of the support in the dominance order.
const LatticeVector& top_degree(const TorusElement& z, const DominanceOrder& order) {
    const LatticeVector* cand = &z.terms()[0].exponent;
    for (const auto& t : z.terms())
        if (order.less(*cand, t.exponent)) cand = &t.exponent;
    return *cand;
}

} // namespace

StandardExpansion StandardBasis::expand(const TorusElement& z) {
    StandardExpansion out;
    TorusElement rem = z;
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 200000) throw Error("NotInSpan", "peeling does not terminate");
        const LatticeVector m = top_degree(rem, order_);
        auto c = multi_index_of(m);
        if (!c) throw Error("NotInSpan", "degree " + vector_key(m) + " needs a negative exponent");
        Coefficient a = rem.coefficient(m);
        rem -= monomial(*c).scaled(a);
        out[*c] += a;
        if (out[*c].is_zero()) out.erase(*c);
    }
    return out;
}

TorusElement StandardBasis::synthesize(const StandardExpansion& e) {
    TorusElement z = TorusElement::zero(table_.seed.reference());
    for (const auto& [c, a] : e) z += monomial(c).scaled(a);
    return z;
}

StraighteningReport StandardBasis::straightening(int k, int j) {
    if (!(1 <= j && j < k && k <= length())) throw Error("IndexOutOfRange", "need 1 <= j < k <= l");
    const TorusContext& ctx = *table_.seed.reference();
    const Int lam = ctx.pairing(gamma(k), gamma(j));
    StraighteningReport r;
    r.k = k;
    r.j = j;
    r.defect = table_.W(k) * table_.W(j) - (table_.W(j) * table_.W(k)).scaled(qpow(static_cast<int>(2 * lam)));
    r.expansion = expand(r.defect);
    r.supported = true;
    for (const auto& [c, a] : r.expansion)
        for (int i = 1; i <= length(); ++i)
            if (c[i - 1] != 0 && (i <= j || i >= k)) r.supported = false;
    return r;
}

const TorusElement& StandardBasis::kl_element(const MultiIndex& c, int budget) {
    auto it = kl_.find(c);
    if (it != kl_.end()) return it->second;
    if (static_cast<int>(kl_.size()) >= budget)
        throw Error("NonTerminating", "KL recursion exceeded budget " + std::to_string(budget));
    const TorusElement z = monomial(c);
    TorusElement defect = z.bar() - z;
    TorusElement result = z;
    while (!defect.is_zero()) {
        const LatticeVector m = top_degree(defect, order_);
        auto cc = multi_index_of(m);
        if (!cc || *cc == c) throw Error("NotInSpan", "bar defect has degree " + vector_key(m));
        const Coefficient r = defect.coefficient(m);
        if (!(r.bar() == -r)) throw Error("NotBarAntisymmetric", r.to_string());
        TorusElement lower = kl_element(*cc, budget);
        defect -= lower.scaled(r);
        result += lower.scaled(r.negative_part());
    }
    return kl_.emplace(c, std::move(result)).first->second;
}

const TorusElement& StandardBasis::kl(const MultiIndex& c, Order o, int budget) {
    const TorusElement& C = kl_element(c, budget);
    if (!(C.bar() == C)) throw Error("NotBarInvariant", "KL element");
    for (const auto& [cp, b] : expand(C)) {
        if (cp == c) {
            if (!b.is_one()) throw Error("NotUnitriangular", "leading coefficient " + b.to_string());
        } else if (!order_less(o, cp, c) || !b.in_mm()) {
            throw Error("NotUnitriangular", "coefficient " + b.to_string());
        }
    }
    return C;
}

std::vector<MultiIndex> multi_indices_up_to(int length, int total) {
    std::vector<MultiIndex> out;
    MultiIndex cur(length, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == length) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, total);
    return out;
}

TriangularReport check_triangular_axioms(const QuantumSeed& s, const std::vector<TorusElement>& sample) {
    TriangularReport rep;
    rep.elements = static_cast<int>(sample.size());
    DominanceOrder order(s.B);
    std::unordered_map<std::string, size_t> byDegree;
    std::vector<LatticeVector> degs;
    for (size_t i = 0; i < sample.size(); ++i) {
        const auto& e = sample[i];
        if (!(e.bar() == e)) rep.failures.push_back("element " + std::to_string(i) + " is not bar-invariant");
        Degree d;
        try {
            d = degree_and_pointedness(e, order);
        } catch (const Error& err) {
            rep.failures.push_back("element " + std::to_string(i) + ": " + err.what());
            degs.emplace_back();
            continue;
        }
        if (!d.pointed) rep.failures.push_back("element " + std::to_string(i) + " is not pointed");
        if (!byDegree.emplace(vector_key(d.degree), i).second)
            rep.failures.push_back("degree " + vector_key(d.degree) + " repeats");
        degs.push_back(d.degree);
    }
    if (!rep.failures.empty()) return rep;
    for (int p = 0; p < s.size(); ++p)
        for (size_t i = 0; i < sample.size(); ++i) {
            const LatticeVector top = degs[i] + unit_vector(s.size(), p);
            TorusElement y = normalize(s.vars[p] * sample[i], order);
            bool skipped = false;
            while (!y.is_zero()) {
                const LatticeVector m = top_degree(y, order);
                auto it = byDegree.find(vector_key(m));
                if (it == byDegree.end()) {
                    skipped = true;
                    break;
                }
                const Coefficient a = y.coefficient(m);
                if (m == top ? !a.is_one() : !(a.in_mm() && order.less(m, top)))
                    rep.failures.push_back("[x_" + std::to_string(s.index.label(p)) + " * element " +
                                           std::to_string(i) + "] has coefficient " + a.to_string() + " at " +
                                           vector_key(m));
                y -= sample[it->second].scaled(a);
            }
            if (skipped) {
                ++rep.products_skipped;
            } else {
                ++rep.products_checked;
            }
        }
    return rep;
}

} // namespace qclaw
