#include "qclaw/torus.hpp"

#include <algorithm>
#include <map>

namespace qclaw {

TorusContext::TorusContext(IntMatrix lambda) : lambda_(std::move(lambda)) {
    if (!is_skew_symmetric(lambda_)) throw Error("NotSkewSymmetric", "quantization matrix");
}

std::shared_ptr<const TorusContext> TorusContext::make(IntMatrix lambda) {
    return std::make_shared<const TorusContext>(std::move(lambda));
}

std::shared_ptr<const TorusContext> TorusContext::commutative(Eigen::Index dim) {
    return make(IntMatrix::Zero(dim, dim));
}

Int TorusContext::pairing(const IntVector& g, const IntVector& h) const {
    return g.dot(lambda_ * h);
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && a->lambda() == b->lambda());
}

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b)) throw Error("ContextMismatch", "torus elements live in different tori");
}

std::vector<TorusTerm> merge_sorted(std::vector<TorusTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const TorusTerm& a, const TorusTerm& b) { return lex_less(a.exponent, b.exponent); });
    std::vector<TorusTerm> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

TorusElement::TorusElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

TorusElement TorusElement::one(ContextPtr ctx) {
    auto n = ctx->dimension();
    return monomial(std::move(ctx), IntVector::Zero(n));
}

TorusElement TorusElement::monomial(ContextPtr ctx, const LatticeVector& m, const Coefficient& c) {
    if (m.size() != ctx->dimension()) throw Error("DimensionMismatch", "exponent vector");
    TorusElement r(std::move(ctx));
    if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

TorusElement TorusElement::from_terms(ContextPtr ctx, std::vector<TorusTerm> terms) {
    for (const auto& t : terms)
        if (t.exponent.size() != ctx->dimension()) throw Error("DimensionMismatch", "exponent vector");
    TorusElement r(std::move(ctx));
    r.terms_ = merge_sorted(std::move(terms));
    return r;
}

Coefficient TorusElement::coefficient(const LatticeVector& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const TorusTerm& t, const LatticeVector& v) { return lex_less(t.exponent, v); });
    if (it != terms_.end() && it->exponent == m) return it->coeff;
    return {};
}

TorusElement TorusElement::bar() const {
    TorusElement r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff.bar();
    return r;
}

TorusElement TorusElement::scaled(const Coefficient& c) const {
    TorusElement r(ctx_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Coefficient p = t.coeff * c;
        if (!p.is_zero()) r.terms_.push_back({t.exponent, std::move(p)});
    }
    return r;
}

TorusElement TorusElement::with_context(ContextPtr ctx) const {
    if (ctx->dimension() != dimension()) throw Error("DimensionMismatch", "context change");
    TorusElement r = *this;
    r.ctx_ = std::move(ctx);
    return r;
}

void TorusElement::combine(const TorusElement& o, int sign) {
    require_same(ctx_, o.ctx_);
    std::vector<TorusTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && lex_less(a->exponent, b->exponent))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || lex_less(b->exponent, a->exponent)) {
            out.push_back({b->exponent, sign > 0 ? b->coeff : -b->coeff});
            ++b;
        } else {
            Coefficient c = sign > 0 ? a->coeff + b->coeff : a->coeff - b->coeff;
            if (!c.is_zero()) out.push_back({a->exponent, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    combine(o, 1);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    combine(o, -1);
    return *this;
}

TorusElement TorusElement::operator-() const {
    return scaled(Coefficient(-1));
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    require_same(a.ctx_, b.ctx_);
    TorusElement r(a.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    const IntMatrix& L = a.ctx_->lambda();
    std::vector<IntVector> lh;
    lh.reserve(b.terms_.size());
    for (const auto& t : b.terms_) lh.push_back(L * t.exponent);
    std::vector<TorusTerm> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (size_t j = 0; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            int shift = static_cast<int>(s.exponent.dot(lh[j]));
            acc.push_back({s.exponent + t.exponent, (s.coeff * t.coeff).shifted(shift)});
        }
    r.terms_ = merge_sorted(std::move(acc));
    return r;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponent != b.terms_[i].exponent || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return a.terms_.empty() || same_context(a.ctx_, b.ctx_);
}

std::string TorusElement::key() const {
    std::string s;
    for (const auto& t : terms_) {
        s += '[' + vector_key(t.exponent) + ']';
        for (const auto& [e, c] : t.coeff.terms()) s += std::to_string(e) + ':' + c.str() + ';';
        s += '|';
    }
    return s;
}

TorusElement power(const TorusElement& a, int n) {
    if (n < 0) throw Error("NegativePower", std::to_string(n));
    TorusElement r = TorusElement::one(a.context());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

namespace {

std::optional<TorusElement> divide_impl(const TorusElement& a, const TorusElement& d, bool left) {
    require_same(a.context(), d.context());
    if (d.is_zero()) throw Error("DivisionByZero", "torus element");
    TorusElement q(a.context());
    if (a.is_zero()) return q;
    const auto n = a.dimension();
    IntVector lo(n), hi(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Int amin = a.terms()[0].exponent(i), amax = amin, dmin = d.terms()[0].exponent(i), dmax = dmin;
        for (const auto& t : a.terms()) {
            amin = std::min(amin, t.exponent(i));
            amax = std::max(amax, t.exponent(i));
        }
        for (const auto& t : d.terms()) {
            dmin = std::min(dmin, t.exponent(i));
            dmax = std::max(dmax, t.exponent(i));
        }
        lo(i) = amin - dmin;
        hi(i) = amax - dmax;
        if (lo(i) > hi(i)) return std::nullopt;
    }
    const TorusTerm& lead = d.terms().back();
    const TorusContext& ctx = *a.context();
    std::map<LatticeVector, Coefficient, LexLess> rem;
    for (const auto& t : a.terms()) rem.emplace(t.exponent, t.coeff);
    std::vector<TorusTerm> quot;
    while (!rem.empty()) {
        const auto top = std::prev(rem.end());
        IntVector m = top->first - lead.exponent;
        for (Eigen::Index i = 0; i < n; ++i)
            if (m(i) < lo(i) || m(i) > hi(i)) return std::nullopt;
        Int twist = left ? ctx.pairing(lead.exponent, m) : ctx.pairing(m, lead.exponent);
        auto c = top->second.shifted(static_cast<int>(-twist)).divide_exact(lead.coeff);
        if (!c) return std::nullopt;
        for (const auto& t : d.terms()) {
            const Int tw = left ? ctx.pairing(t.exponent, m) : ctx.pairing(m, t.exponent);
            auto [it, fresh] = rem.try_emplace(t.exponent + m);
            it->second -= (t.coeff * *c).shifted(static_cast<int>(tw));
            if (it->second.is_zero()) rem.erase(it);
        }
        quot.push_back({std::move(m), std::move(*c)});
    }
    return TorusElement::from_terms(a.context(), std::move(quot));
}

} // namespace

std::optional<TorusElement> try_divide(const TorusElement& a, const TorusElement& d) {
    return divide_impl(a, d, true);
}

std::optional<TorusElement> try_divide_right(const TorusElement& a, const TorusElement& d) {
    return divide_impl(a, d, false);
}

TorusElement exact_divide(const TorusElement& a, const TorusElement& d) {
    auto r = try_divide(a, d);
    if (!r) throw Error("NotDivisible", "no torus quotient exists");
    return *r;
}

TorusElement exact_divide_right(const TorusElement& a, const TorusElement& d) {
    auto r = try_divide_right(a, d);
    if (!r) throw Error("NotDivisible", "no torus quotient exists");
    return *r;
}

Int vanishing_order(const TorusElement& z, int pos) {
    if (z.is_zero()) throw Error("ZeroElement", "vanishing order of zero");
    Int m = z.terms()[0].exponent(pos);
    for (const auto& t : z.terms()) m = std::min(m, t.exponent(pos));
    return m;
}

bool in_compactified_torus(const TorusElement& z, const std::vector<int>& frozenPositions) {
    if (z.is_zero()) return true;
    for (int j : frozenPositions)
        if (vanishing_order(z, j) < 0) return false;
    return true;
}

TorusElement semiclassical_limit(const TorusElement& z) {
    auto ctx = TorusContext::commutative(z.dimension());
    std::vector<TorusTerm> terms;
    for (const auto& t : z.terms()) terms.push_back({t.exponent, Coefficient(t.coeff.at_one())});
    return TorusElement::from_terms(ctx, std::move(terms));
}

DominanceOrder::DominanceOrder(const IntMatrix& btilde) : b_(btilde) {
    const Eigen::Index m = b_.cols();
    RowEchelon<Rational> e(cast_matrix<Rational>(b_.transpose()));
    if (e.rank() < m) throw Error("RankDeficient", "exchange matrix lacks full column rank");
    rows_ = e.pivots;
    Matrix<Rational> square(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) square(r, c) = Rational(b_(rows_[r], c));
    inv_ = *inverse_exact(square);
}

std::optional<IntVector> DominanceOrder::cone_coordinates(const IntVector& diff) const {
    const Eigen::Index m = b_.cols();
    IntVector n(m);
    for (Eigen::Index r = 0; r < m; ++r) {
        Rational s = 0;
        for (Eigen::Index c = 0; c < m; ++c)
            if (diff(rows_[c]) != 0) s += inv_(r, c) * diff(rows_[c]);
        auto v = to_integer(s);
        if (!v) return std::nullopt;
        n(r) = *v;
    }
    if (b_ * n != diff) return std::nullopt;
    return n;
}

bool DominanceOrder::leq(const LatticeVector& lower, const LatticeVector& upper) const {
    if (lower == upper) return true;
    auto n = cone_coordinates(lower - upper);
    return n && (n->array() >= 0).all();
}

bool DominanceOrder::less(const LatticeVector& lower, const LatticeVector& upper) const {
    return lower != upper && leq(lower, upper);
}

bool dominance_leq(const LatticeVector& m1, const LatticeVector& m2, const IntMatrix& btilde) {
    return DominanceOrder(btilde).leq(m1, m2);
}

Degree degree_and_pointedness(const TorusElement& z, const DominanceOrder& order) {
    if (z.is_zero()) throw Error("ZeroElement", "zero has no degree");
    const LatticeVector* cand = &z.terms()[0].exponent;
    for (const auto& t : z.terms())
        if (order.leq(*cand, t.exponent)) cand = &t.exponent;
    for (const auto& t : z.terms())
        if (!order.leq(t.exponent, *cand)) throw Error("NoUniqueMaxDegree", "incomparable maximal support elements");
    return {*cand, z.coefficient(*cand).is_one()};
}

TorusElement normalize(const TorusElement& z, const DominanceOrder& order) {
    auto d = degree_and_pointedness(z, order);
    const Coefficient lead = z.coefficient(d.degree);
    auto e = lead.monomial_exponent();
    if (!e || lead.terms()[0].second != 1) throw Error("LeadingCoefficientNotUnit", lead.to_string());
    return z.scaled(qpow(-*e));
}

std::vector<LatticeVector> maximal_degrees(const TorusElement& z, const DominanceOrder& order) {
    std::vector<LatticeVector> out;
    for (const auto& t : z.terms()) {
        bool dominated = false;
        for (const auto& s : z.terms())
            if (order.less(t.exponent, s.exponent)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(t.exponent);
    }
    return out;
}

} // namespace qclaw
