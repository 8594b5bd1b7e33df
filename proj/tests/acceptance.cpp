#include "checks.hpp"

#include <chrono>
#include <iostream>

using namespace qclaw;
using namespace qclaw::checks;

namespace {

template <class F>
bool report(int n, const std::string& title, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << title << " (" << o.detail << "; " << secs
              << " s)" << std::endl;
    return o.pass;
}

} // namespace

int main() {
    bool ok = true;
    ok &= report(1, "golden nu-matrix", [] { return golden_subset("sl3", {"iota", "nu"}); });
    ok &= report(2, "golden Lambda-matrix", [] { return golden_subset("sl3", {"Lambda", "Lambda_14", "Lambda_13"}); });
    ok &= report(3, "golden quiver", [] { return golden_subset("sl3", {"frozen", "quiver"}); });
    ok &= report(4, "golden exchange relation",
                 [] { return golden_subset("sl3", {"compatible", "exchange", "mutated_quiver"}); });
    ok &= report(5, "mutation laws on random compatible seeds", [] { return mutation_laws(200); });
    ok &= report(6, "Laurent phenomenon along paths of depth <= 6", [] {
        Outcome o = laurent_paths(named_seed("A2f"), 6);
        Outcome p = laurent_paths(named_seed("A3f"), 6);
        if (!p.pass) o.fail(p.detail);
        if (o.pass) o.detail = "A2: " + o.detail + ", A3: " + p.detail;
        return o;
    });
    ok &= report(7, "BZ seeds of (w0, w0) are mutation equivalent", [] {
        Outcome o = theorem_a("A1", 12);
        Outcome p = theorem_a("A2", 12);
        if (!p.pass) o.fail(p.detail);
        if (o.pass) o.detail = "A1: " + o.detail + ", A2: " + p.detail;
        return o;
    });
    ok &= report(8, "flip exchange q-powers", [] { return flip_qpowers_corpus(); });
    ok &= report(9, "standard and triangular bases", [] { return bases_desk(3); });
    ok &= report(10, "straightening support", [] { return straightening_all(); });
    ok &= report(11, "compactification calculus", [] {
        Outcome o = nu_invariance(500);
        std::string detail = "nu_j: " + o.detail;
        for (Outcome p : {single_vs_all_seeds(60), pi_checks(200)}) {
            if (!p.pass) o.fail(p.detail);
            detail += "; " + p.detail;
        }
        if (o.pass) o.detail = detail;
        return o;
    });
    ok &= report(12, "intersection harness", [] { return intersection(100); });
    return ok ? 0 : 1;
}
