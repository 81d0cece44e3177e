#include "zzag/word.hpp"

#include <algorithm>

namespace zzag {

MoveWord::MoveWord(ZigzagType base, std::vector<Move> moves)
    : base_(std::move(base)), moves_(std::move(moves)) {
    if (!base_.is_one_standard()) throw DomainError("word base must be 1-standard: " + base_.str());
    for (const Move& m : moves_) {
        if (auto* f = std::get_if<FiberedModification>(&m)) {
            if (f->degree < 2) throw DomainError("fibration-preserving move of degree < 2");
        }
        if (auto* r = std::get_if<Reversion>(&m)) {
            if (r->center_in == kFiberBasePoint || r->center_out == kFiberBasePoint)
                throw DomainError("reversion centers lie away from the fiber base point");
        }
    }
}

bool is_minimal(const MoveWord& w) {
    const auto& ms = w.moves();
    if (ms.size() > 1) {
        for (const Move& m : ms)
            if (is_isomorphism(m)) return false;
    }
    bool has_deep_curve = w.base().tail_has_leq_minus_three();
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
        if (center_out(ms[i]) == center_in(ms[i + 1])) return false;
        if (is_reversion(ms[i]) && is_reversion(ms[i + 1]) && !has_deep_curve) return false;
    }
    return true;
}

MoveWord reduce(const MoveWord& w, const FiberedComposer& composer) {
    std::vector<Move> ms = w.moves();
    auto tail = w.base().tail();

    bool changed = true;
    while (changed) {
        changed = false;
        // drop interior identity isomorphisms
        for (std::size_t i = 0; i < ms.size();) {
            if (ms.size() > 1 && is_isomorphism(ms[i]) &&
                std::get<Isomorphism>(ms[i]).relabel.empty()) {
                ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                ++i;
            }
        }
        for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
            if (is_fibered(ms[i]) && is_fibered(ms[i + 1]) && composer) {
                auto merged = composer(std::get<FiberedModification>(ms[i]),
                                       std::get<FiberedModification>(ms[i + 1]));
                if (merged) {
                    ms[i] = *merged;
                    ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                    changed = true;
                    break;
                }
            }
            ComposeResult res = compose_adjacent(ms[i], ms[i + 1], tail);
            if (res.composed) {
                ms[i] = res.move;
                ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    if (ms.empty()) ms.push_back(Isomorphism{});
    return MoveWord(w.base(), std::move(ms));
}

std::vector<ZigzagType> type_trace(const MoveWord& w) {
    std::vector<ZigzagType> out;
    ZigzagType cur = w.base();
    for (const Move& m : w.moves()) {
        if (is_reversion(m)) cur = reversion_transform(cur);
        out.push_back(cur);
    }
    return out;
}

ZigzagType final_type(const MoveWord& w) {
    auto trace = type_trace(w);
    return trace.empty() ? w.base() : trace.back();
}

MoveWord invert_word(const MoveWord& w) {
    std::vector<Move> ms;
    ms.reserve(w.size());
    for (auto it = w.moves().rbegin(); it != w.moves().rend(); ++it) {
        if (auto* r = std::get_if<Reversion>(&*it))
            ms.push_back(Reversion{r->center_out, r->center_in});
        else
            ms.push_back(*it);
    }
    return MoveWord(final_type(w), std::move(ms));
}

MoveWord concat(const MoveWord& a, const MoveWord& b) {
    if (final_type(a) != b.base())
        throw DomainError("words do not compose: " + final_type(a).str() + " vs " + b.base().str());
    std::vector<Move> ms = a.moves();
    ms.insert(ms.end(), b.moves().begin(), b.moves().end());
    return MoveWord(a.base(), std::move(ms));
}

std::size_t reversion_count(const MoveWord& w) {
    return static_cast<std::size_t>(
        std::count_if(w.moves().begin(), w.moves().end(), is_reversion));
}

} // namespace zzag
