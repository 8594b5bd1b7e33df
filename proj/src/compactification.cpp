#include "qclaw/compactification.hpp"

#include <algorithm>

namespace qclaw {

QuantumSeed own_mutation(const QuantumSeed& s, int k) { return with_own_torus(mutate_seed(with_own_torus(s), k)); }

namespace {

void require_own(const TorusElement& z, const QuantumSeed& s) {
    if (!same_context(z.context(), s.reference())) throw Error("ContextMismatch", "element is not in the seed's torus");
}

} // namespace

std::optional<TorusElement> reexpress_step(const TorusElement& z, const QuantumSeed& s, int k,
                                           const QuantumSeed& next) {
    require_own(z, s);
    const int p = s.index.position(k);
    const int n = s.size();
    const IntMatrix L = s.lambda_or_zero();
    const ContextPtr& target = next.reference();
    const TorusElement phiK = mutate_seed(next, k).vars[p];
    Int e = 0;
    for (const auto& t : z.terms()) e = std::max<Int>(e, -t.exponent(p));
    const TorusElement z1 = z * TorusElement::monomial(z.context(), e * unit_vector(n, p));
    std::vector<TorusElement> phiPowers{TorusElement::one(target)};
    TorusElement image = TorusElement::zero(target);
    for (const auto& t : z1.terms()) {
        const LatticeVector& m = t.exponent;
        Int shift = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) shift -= L(i, j) * m(i) * m(j);
        TorusElement prod =
            TorusElement::monomial(target, LatticeVector::Zero(n), t.coeff.shifted(static_cast<int>(shift)));
        for (int i = 0; i < n; ++i) {
            if (m(i) == 0) continue;
            if (i == p) {
                while (static_cast<Int>(phiPowers.size()) <= m(i)) phiPowers.push_back(phiPowers.back() * phiK);
                prod = prod * phiPowers[m(i)];
            } else {
                prod = prod * TorusElement::monomial(target, m(i) * unit_vector(n, i));
            }
        }
        image += prod;
    }
    if (e == 0) return image;
    return try_divide_right(image, power(phiK, static_cast<int>(e)));
}

std::optional<TorusElement> reexpress_in_seed(const TorusElement& z, const QuantumSeed& s,
                                              const std::vector<int>& mutations) {
    QuantumSeed cur = s;
    std::optional<TorusElement> w = z;
    for (int k : mutations) {
        QuantumSeed next = own_mutation(cur, k);
        w = reexpress_step(*w, cur, k, next);
        if (!w) return std::nullopt;
        cur = std::move(next);
    }
    return w;
}

MembershipReport check_membership(const TorusElement& z, const QuantumSeed& s, int maxSeeds) {
    require_own(z, s);
    MembershipReport r{z, {}, {}, {}, false, false, false, false};
    const ExchangeGraph g = enumerate_exchange_graph(s, maxSeeds, true);
    r.partial = g.truncated;
    std::vector<std::optional<QuantumSeed>> own(g.seeds.size());
    std::vector<std::optional<TorusElement>> expr(g.seeds.size());
    own[0] = s;
    expr[0] = z;
    r.perSeed.push_back(true);
    r.seedNames.push_back(s.name);
    for (size_t i = 1; i < g.seeds.size(); ++i) {
        own[i] = with_own_torus(g.seeds[i]);
        r.seedNames.push_back(g.seeds[i].name);
        const int par = g.parent[i];
        if (!expr[par]) {
            r.perSeed.push_back(std::nullopt);
            continue;
        }
        expr[i] = reexpress_step(*expr[par], *own[par], g.via[i], *own[i]);
        r.perSeed.push_back(expr[i].has_value());
    }
    r.inU = std::all_of(r.perSeed.begin(), r.perSeed.end(), [](const auto& b) { return b && *b; });
    bool initialOk = true;
    bool allOk = true;
    if (!z.is_zero()) {
        for (int p : s.index.frozen_positions()) {
            const Int nu = vanishing_order(z, p);
            r.frozenOrders[s.index.label(p)] = nu;
            initialOk = initialOk && nu >= 0;
        }
        for (size_t i = 0; i < expr.size(); ++i)
            if (expr[i])
                for (int p : s.index.frozen_positions()) allOk = allOk && vanishing_order(*expr[i], p) >= 0;
    }
    r.inBarU = r.inU && initialOk;
    r.inBarUAllSeeds = r.inU && allOk;
    return r;
}

bool frozen_divides(const QuantumSeed& s, int j, const TorusElement& z) {
    const int p = s.index.position(j);
    if (!s.index.is_frozen(p)) throw Error("NotFrozen", std::to_string(j));
    return !z.is_zero() && vanishing_order(z, p) >= 1;
}

WitnessReport frozen_is_prime_witness(const QuantumSeed& s, int j, int samples, Rng& rng) {
    const int p = s.index.position(j);
    if (!s.index.is_frozen(p)) throw Error("NotFrozen", std::to_string(j));
    const ContextPtr& ctx = s.reference();
    const int n = s.size();
    const auto& frozen = s.index.frozen_positions();
    const TorusElement xj = TorusElement::monomial(ctx, unit_vector(n, p));
    const TorusElement xjInv = TorusElement::monomial(ctx, -unit_vector(n, p));
    WitnessReport r;
    auto draw = [&]() {
        TorusElement a = random_torus_element(ctx, rng, uniform_int(rng, 1, 3), -2, 2, frozen);
        if (vanishing_order(a, p) != 0) ++r.excluded;
        return a * TorusElement::monomial(ctx, -vanishing_order(a, p) * unit_vector(n, p));
    };
    for (int t = 0; t < samples; ++t) {
        const TorusElement a = draw();
        const TorusElement b = draw();
        ++r.checked;
        if (vanishing_order(a * b, p) != 0) r.failures.push_back("nu_j(a*b) != 0 at sample " + std::to_string(t));
        const TorusElement conj = xj * a * xjInv;
        if (!in_compactified_torus(conj, frozen) || vanishing_order(conj, p) != 0)
            r.failures.push_back("x_j a x_j^-1 leaves the algebra at sample " + std::to_string(t));
    }
    return r;
}

namespace {

/// Cluster monomials of degree <= 2 in the unfrozen variables of each seed.
std::vector<TorusElement> unfrozen_monomials(const std::vector<QuantumSeed>& seeds) {
    std::vector<TorusElement> out;
    for (const auto& x : seeds) {
        const auto& uf = x.index.unfrozen();
        for (size_t a = 0; a < uf.size(); ++a) {
            out.push_back(x.vars[uf[a]]);
            for (size_t b = a; b < uf.size(); ++b) out.push_back(x.vars[uf[a]] * x.vars[uf[b]]);
        }
    }
    return out;
}

} // namespace

HarnessReport intersection_harness(const QuantumSeed& s, int samples, Rng& rng, int maxSeeds) {
    HarnessReport r;
    const ContextPtr& ctx = s.reference();
    const int n = s.size();
    const ExchangeGraph g = enumerate_exchange_graph(s, maxSeeds, true);
    const auto& frozen = s.index.frozen_positions();
    const auto& unfrozen = s.index.unfrozen();

    for (const auto& u : unfrozen_monomials(g.seeds))
        for (int p : frozen) {
            ++r.notDivChecked;
            if (vanishing_order(u, p) != 0)
                r.failures.push_back("x_" + std::to_string(s.index.label(p)) + " divides " + u.key());
        }

    auto frozenMonomial = [&](int lo, int hi) {
        LatticeVector m = LatticeVector::Zero(n);
        for (int p : frozen) m(p) = uniform_int(rng, lo, hi);
        return TorusElement::monomial(ctx, m);
    };
    auto member = [&](const TorusElement& z) {
        const auto rep = check_membership(z, s, maxSeeds);
        return rep.inBarU && !rep.partial;
    };
    const int maxAttempts = 20 * samples;
    while (r.samples < samples && r.attempts < maxAttempts) {
        ++r.attempts;
        TorusElement a0 = TorusElement::zero(ctx);
        for (int t = uniform_int(rng, 1, 2); t > 0; --t) {
            const auto& x = g.seeds[uniform_int(rng, 0, static_cast<int>(g.seeds.size()) - 1)];
            TorusElement mono = TorusElement::one(ctx);
            for (int p : unfrozen)
                for (int e = uniform_int(rng, 0, 1); e > 0; --e) mono = mono * x.vars[p];
            a0 += (mono * frozenMonomial(0, 2)).scaled(random_coefficient(rng, 1, 2, 2));
        }
        if (a0.is_zero()) continue;
        const TorusElement F = frozenMonomial(0, 2);
        const TorusElement Finv = TorusElement::monomial(ctx, -F.terms()[0].exponent);
        const TorusElement z = a0 * Finv;
        LatticeVector um = LatticeVector::Zero(n);
        for (int p : unfrozen) um(p) = uniform_int(rng, 0, 2);
        const TorusElement U = TorusElement::monomial(ctx, um);
        const TorusElement Uinv = TorusElement::monomial(ctx, -um);
        const TorusElement a = z * F;
        const TorusElement ap = U * z;
        if (!(a * Finv == Uinv * ap)) {
            r.failures.push_back("representations disagree");
            continue;
        }
        if (!member(a) || !member(ap)) continue;
        ++r.samples;
        if (member(z)) {
            ++r.inA;
        } else {
            r.failures.push_back("sample " + std::to_string(r.samples) + " outside A: " + z.key());
        }
    }
    if (r.samples < samples) r.failures.push_back("only " + std::to_string(r.samples) + " two-representation samples");
    return r;
}

QuantumSeed freeze_vertices(const QuantumSeed& s, const std::vector<int>& F) {
    std::vector<int> frozen = s.index.frozen_labels();
    for (int f : F) {
        if (s.index.is_frozen(s.index.position(f))) throw Error("NotUnfrozen", std::to_string(f));
        frozen.push_back(f);
    }
    IndexSet index(s.index.labels(), frozen);
    IntMatrix B(s.size(), static_cast<Eigen::Index>(index.unfrozen().size()));
    for (int p : index.unfrozen()) B.col(index.column(p)) = s.B.col(s.index.column(p));
    QuantumSeed t{index, B, s.Lambda, s.vars, s.name};
    validate_seed(t);
    return t;
}

QuantumSeed delete_vertex(const QuantumSeed& s, int j) {
    const int p = s.index.position(j);
    std::vector<int> labels;
    std::vector<int> frozen;
    std::vector<int> keep;
    for (int q = 0; q < s.size(); ++q) {
        if (q == p) continue;
        keep.push_back(q);
        labels.push_back(s.index.label(q));
        if (s.index.is_frozen(q)) frozen.push_back(s.index.label(q));
    }
    IndexSet index(labels, frozen);
    const int n = static_cast<int>(keep.size());
    IntMatrix B(n, static_cast<Eigen::Index>(index.unfrozen().size()));
    for (int a = 0; a < n; ++a)
        for (int c : index.unfrozen()) B(a, index.column(c)) = s.B(keep[a], s.index.column(keep[c]));
    std::optional<IntMatrix> L;
    if (s.Lambda) {
        L = IntMatrix(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) (*L)(a, b) = (*s.Lambda)(keep[a], keep[b]);
    }
    return make_seed(index, B, L, s.name.empty() ? s.name : s.name + "/" + std::to_string(j));
}

bool is_non_essential(const QuantumSeed& s, int j) {
    const int p = s.index.position(j);
    return s.index.is_frozen(p) && s.B.row(p).isZero();
}

TorusElement pi_quotient(const QuantumSeed& s, int j, const TorusElement& z, const QuantumSeed& deleted) {
    if (!is_non_essential(s, j)) throw Error("NonEssentialViolated", "vertex " + std::to_string(j));
    const int p = s.index.position(j);
    if (!z.is_zero() && vanishing_order(z, p) < 0) throw Error("NegativeOrder", "nu_j(z) < 0");
    const int n = s.size();
    TorusElement out = TorusElement::zero(deleted.reference());
    for (const auto& t : z.terms()) {
        if (t.exponent(p) > 0) continue;
        LatticeVector m(n - 1);
        for (int q = 0, a = 0; q < n; ++q)
            if (q != p) m(a++) = t.exponent(q);
        out += TorusElement::monomial(deleted.reference(), m, t.coeff);
    }
    return out;
}

TorusElement pi_quotient(const QuantumSeed& s, int j, const TorusElement& z) {
    return pi_quotient(s, j, z, delete_vertex(s, j));
}

} // namespace qclaw
