#include "zzag/zigzag.hpp"

#include <algorithm>
#include <sstream>

namespace zzag {

ZigzagType::ZigzagType(std::vector<Weight> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw DomainError("empty zigzag");
}

ZigzagType ZigzagType::parse(std::string_view csv) {
    std::vector<Weight> w;
    std::string item;
    std::stringstream ss{std::string(csv)};
    while (std::getline(ss, item, ',')) {
        std::erase_if(item, [](char c) { return c == ' ' || c == '\t'; });
        if (item.empty()) throw DomainError("bad zigzag type: '" + std::string(csv) + "'");
        try {
            w.emplace_back(item);
        } catch (const std::exception&) {
            throw DomainError("bad zigzag weight: '" + item + "'");
        }
    }
    return ZigzagType(std::move(w));
}

ZigzagType ZigzagType::reversed() const {
    std::vector<Weight> w(w_.rbegin(), w_.rend());
    return ZigzagType(std::move(w));
}

bool ZigzagType::is_m_standard(const Weight& m) const {
    if (w_.size() < 2) return false;
    if (w_[0] != 0 || w_[1] != -m) return false;
    return std::all_of(w_.begin() + 2, w_.end(), [](const Weight& e) { return e <= -2; });
}

std::vector<Weight> ZigzagType::tail() const {
    if (!is_one_standard()) throw DomainError("not a 1-standard type: " + str());
    return {w_.begin() + 2, w_.end()};
}

bool ZigzagType::tail_all_minus_two() const {
    auto t = tail();
    return std::all_of(t.begin(), t.end(), [](const Weight& e) { return e == -2; });
}

bool ZigzagType::tail_has_leq_minus_three() const {
    auto t = tail();
    return std::any_of(t.begin(), t.end(), [](const Weight& e) { return e <= -3; });
}

std::string ZigzagType::str() const {
    std::string out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) out += ',';
        out += w_[i].str();
    }
    return out;
}

ZigzagType concat(std::span<const Weight> a, std::span<const Weight> b) {
    std::vector<Weight> w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return ZigzagType(std::move(w));
}

ZigzagType concat(const ZigzagType& a, const ZigzagType& b) {
    return concat(std::span<const Weight>(a.weights()), std::span<const Weight>(b.weights()));
}

MarkedZigzag::MarkedZigzag(std::vector<Weight> weights, std::size_t positive)
    : w_(std::move(weights)), m_(positive) {
    if (w_.empty()) throw DomainError("empty zigzag");
    if (m_ >= w_.size()) throw DomainError("positive index out of range");
    if (w_[m_] < 0) throw DomainError("marked curve has negative self-intersection");
}

MarkedZigzag MarkedZigzag::from_type(const ZigzagType& t) {
    std::optional<std::size_t> m;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.weights()[i] >= 0) {
            if (m) throw DomainError("more than one non-negative curve in " + t.str());
            m = i;
        }
    }
    if (!m) throw DomainError("no non-negative curve in " + t.str());
    return MarkedZigzag(t.weights(), *m);
}

std::optional<std::size_t> MarkedZigzag::minus_one_index() const {
    std::optional<std::size_t> l;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] == -1) {
            if (l) return std::nullopt; // two (-1)-curves
            l = i;
        }
    }
    if (l && (*l == m_ + 1 || m_ == *l + 1)) return l;
    return std::nullopt;
}

bool MarkedZigzag::almost_standard() const {
    std::size_t nonneg = 0, minus_ones = 0;
    std::optional<std::size_t> l;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i] >= 0) ++nonneg;
        if (w_[i] == -1) {
            ++minus_ones;
            l = i;
        }
    }
    if (nonneg != 1 || w_[m_] < 0) return false;
    if (minus_ones > 1) return false;
    if (minus_ones == 1 && !(*l == m_ + 1 || m_ == *l + 1)) return false;
    return true;
}

ZigzagType MarkedZigzag::oriented_type() const {
    if (m_ == 0) return type();
    if (m_ == w_.size() - 1) return type().reversed();
    throw DomainError("positive curve is not a boundary of the chain");
}

bool validate_almost_standard(const MarkedZigzag& z) { return z.almost_standard(); }

} // namespace zzag
