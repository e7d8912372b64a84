#include "pathmorse/chain.hpp"

namespace pathmorse {

Rational Chain::coefficient(const Path& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add(const Path& p, const Rational& c) {
    if (p.dimension() != dimension_) throw std::invalid_argument("chain dimension mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Chain::add(const Chain& other, const Rational& scale) {
    for (const auto& [p, c] : other.terms_) add(p, c * scale);
}

Chain Chain::operator*(const Rational& scale) const {
    Chain result(dimension_);
    if (scale != 0) {
        for (const auto& [p, c] : terms_) result.terms_.emplace(p, c * scale);
    }
    return result;
}

Chain Chain::operator+(const Chain& other) const {
    Chain result = *this;
    result.add(other);
    return result;
}

Chain Chain::operator-(const Chain& other) const {
    Chain result = *this;
    result.add(other, -1);
    return result;
}

bool Chain::supported_on_allowed(const Digraph& g) const {
    for (const auto& [p, c] : terms_) {
        if (!p.is_elementary() || !p.allowed_in(g)) return false;
    }
    return true;
}

std::string Chain::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rational_to_string(c) + "*(" + p.to_string() + ")";
    }
    return s;
}

std::string Chain::to_string(const Digraph& g) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rational_to_string(c) + "*(" + p.to_string(g) + ")";
    }
    return s;
}

Chain boundary(const Path& p) {
    Chain result(p.dimension() - 1);
    if (p.dimension() == 0) return result;
    Rational sign = 1;
    for (int i = 0; i <= p.dimension(); ++i) {
        result.add(p.face(i), sign);
        sign = -sign;
    }
    return result;
}

Chain boundary(const Chain& c) {
    Chain result(c.dimension() - 1);
    for (const auto& [p, coeff] : c.terms()) {
        result.add(boundary(p), coeff);
    }
    return result;
}

}  // namespace pathmorse
