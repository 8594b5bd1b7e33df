#include "qclaw/coefficient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qclaw {

Coefficient::Coefficient(long long c) {
    if (c != 0) terms_.emplace_back(0, BigInt(c));
}

Coefficient::Coefficient(const BigInt& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

Coefficient Coefficient::monomial(int halfExp, const BigInt& c) {
    Coefficient r;
    if (c != 0) r.terms_.emplace_back(halfExp, c);
    return r;
}

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int Coefficient::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero coefficient has no exponent");
    return terms_.front().first;
}

int Coefficient::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero coefficient has no exponent");
    return terms_.back().first;
}

std::optional<int> Coefficient::monomial_exponent() const {
    if (terms_.size() != 1) return std::nullopt;
    return terms_[0].first;
}

Coefficient Coefficient::shifted(int halfExp) const {
    Coefficient r = *this;
    for (auto& t : r.terms_) t.first += halfExp;
    return r;
}

Coefficient Coefficient::bar() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(-it->first, it->second);
    return Coefficient(std::move(out));
}

bool Coefficient::in_mm() const {
    return terms_.empty() || terms_.back().first <= -1;
}

BigInt Coefficient::at_one() const {
    BigInt s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

Coefficient Coefficient::negative_part() const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.first < 0) out.push_back(t);
    return Coefficient(std::move(out));
}

void Coefficient::add_scaled(const Coefficient& o, int sign) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.emplace_back(b->first, sign > 0 ? b->second : BigInt(-b->second));
            ++b;
        } else {
            BigInt c = a->second;
            if (sign > 0) {
                c += b->second;
            } else {
                c -= b->second;
            }
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    add_scaled(o, 1);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    add_scaled(o, -1);
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    *this = *this * o;
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) {
        Coefficient r = a;
        for (auto& t : r.terms_) {
            t.first += b.terms_[0].first;
            t.second *= b.terms_[0].second;
        }
        return r;
    }
    std::map<int, BigInt> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc[s.first + t.first] += s.second * t.second;
    std::vector<Coefficient::Term> out;
    for (auto& [e, c] : acc)
        if (c != 0) out.emplace_back(e, std::move(c));
    return Coefficient(std::move(out));
}

std::optional<Coefficient> Coefficient::divide_exact(const Coefficient& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero coefficient");
    if (is_zero()) return Coefficient{};
    const BigInt& lead = d.terms_.back().second;
    const int dTop = d.terms_.back().first;
    const int dSpan = dTop - d.terms_.front().first;
    Coefficient rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        if (rem.max_exponent() - rem.min_exponent() < dSpan) return std::nullopt;
        const auto& top = rem.terms_.back();
        if (top.second % lead != 0) return std::nullopt;
        Coefficient step = Coefficient::monomial(top.first - dTop, top.second / lead);
        quot.push_back(step.terms_[0]);
        rem -= step * d;
    }
    std::reverse(quot.begin(), quot.end());
    return Coefficient(std::move(quot));
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*q^(" + std::to_string(e) + "/2)";
    }
    return s;
}

} // namespace qclaw
