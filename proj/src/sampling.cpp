#include "qclaw/sampling.hpp"

#include <numeric>

namespace qclaw {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Coefficient random_coefficient(Rng& rng, int maxTerms, int halfExpRange, int coeffRange) {
    Coefficient c;
    const int n = uniform_int(rng, 1, maxTerms);
    for (int i = 0; i < n; ++i) {
        int v = uniform_int(rng, 1, coeffRange);
        if (uniform_int(rng, 0, 1)) v = -v;
        c += Coefficient::monomial(uniform_int(rng, -halfExpRange, halfExpRange), v);
    }
    return c;
}

TorusElement random_torus_element(const ContextPtr& ctx, Rng& rng, int terms, int lo, int hi,
                                  const std::vector<int>& nonnegPositions) {
    TorusElement z = TorusElement::zero(ctx);
    const int n = ctx->dimension();
    for (int t = 0; t < terms; ++t) {
        LatticeVector m(n);
        for (int i = 0; i < n; ++i) m(i) = uniform_int(rng, lo, hi);
        for (int p : nonnegPositions) m(p) = uniform_int(rng, 0, hi);
        z += TorusElement::monomial(ctx, m, random_coefficient(rng, 2, 2, 3));
    }
    return z;
}

QuantumSeed random_compatible_seed(Rng& rng, int unfrozen, int frozen, int maxEntry) {
    const int n = unfrozen + frozen;
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<int> frozenLabels(labels.begin() + unfrozen, labels.end());
    IndexSet index(labels, frozenLabels);
    if (frozen == 0 && unfrozen % 2 == 1)
        throw Error("SamplingFailed", "a square skew-symmetrizable matrix of odd size is singular");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> d(unfrozen);
        for (int& x : d) x = uniform_int(rng, 1, std::max(1, std::min(maxEntry, 2)));
        IntMatrix B = IntMatrix::Zero(n, unfrozen);
        for (int i = 0; i < unfrozen; ++i)
            for (int j = i + 1; j < unfrozen; ++j) {
                const int s = uniform_int(rng, -1, 1);
                B(i, j) = s * d[j];
                B(j, i) = -s * d[i];
            }
        for (int i = unfrozen; i < n; ++i)
            for (int k = 0; k < unfrozen; ++k) B(i, k) = uniform_int(rng, -maxEntry, maxEntry);
        if (B.cwiseAbs().maxCoeff() > maxEntry || exact_rank(B) < unfrozen) continue;
        auto L = find_compatible_lambda(index, B);
        if (!L) continue;
        return make_seed(index, B, *L, "random");
    }
    throw Error("SamplingFailed", "no compatible seed found");
}

} // namespace qclaw
