#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zzag/field.hpp"

namespace zzag {

// Self-intersection numbers of boundary chains. Unbounded integers: boundary
// rewrites decrement them without limit.
using Weight = Int;

// Ordered weight vector of a boundary chain. Order encodes the orientation:
// the reversed vector is a distinct value unless palindromic. Never empty.
class ZigzagType {
public:
    explicit ZigzagType(std::vector<Weight> weights);

    static ZigzagType parse(std::string_view csv); // "0,-1,-2,-3"

    const std::vector<Weight>& weights() const { return w_; }
    std::size_t size() const { return w_.size(); }

    ZigzagType reversed() const;

    // True iff weights = (0, -m, e_1..e_r) with every e_i <= -2, r >= 0.
    bool is_m_standard(const Weight& m) const;
    bool is_one_standard() const { return is_m_standard(1); }

    // Entries after the leading (0, -1); requires a 1-standard type.
    std::vector<Weight> tail() const;
    // True iff every tail entry is -2 (empty tail counts).
    bool tail_all_minus_two() const;
    // True iff some tail entry is <= -3.
    bool tail_has_leq_minus_three() const;

    std::string str() const; // "0,-1,-2,-3"

    friend bool operator==(const ZigzagType&, const ZigzagType&) = default;

private:
    std::vector<Weight> w_;
};

// Ordered concatenation; either side may be empty, the result may not.
ZigzagType concat(std::span<const Weight> a, std::span<const Weight> b);
ZigzagType concat(const ZigzagType& a, const ZigzagType& b);

// A zigzag with a marked non-negative curve. The (-1)-curve position is
// derived, not stored: transient rewrite states may carry two (-1)-curves and
// are reported as not almost-standard instead of being rejected.
class MarkedZigzag {
public:
    MarkedZigzag(std::vector<Weight> weights, std::size_t positive);

    // Marks the unique non-negative entry; throws if there is not exactly one.
    static MarkedZigzag from_type(const ZigzagType& t);

    const std::vector<Weight>& weights() const { return w_; }
    std::size_t size() const { return w_.size(); }
    std::size_t positive_index() const { return m_; }

    // Unique (-1) adjacent to the positive curve, if the zigzag has exactly
    // one (-1)-entry and it is adjacent.
    std::optional<std::size_t> minus_one_index() const;

    // Exactly one non-negative entry (the marked one), at most one (-1) and,
    // if present, adjacent to it.
    bool almost_standard() const;

    ZigzagType type() const { return ZigzagType(w_); }
    // Oriented with the positive curve first; requires it at an end.
    ZigzagType oriented_type() const;

    friend bool operator==(const MarkedZigzag&, const MarkedZigzag&) = default;

private:
    std::vector<Weight> w_;
    std::size_t m_;
};

bool validate_almost_standard(const MarkedZigzag& z);

} // namespace zzag
