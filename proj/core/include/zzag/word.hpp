#pragma once

#include <functional>

#include "zzag/moves.hpp"

namespace zzag {

// Word of moves out of a fixed 1-standard base pair, composed left to right
// (moves()[0] acts first).
class MoveWord {
public:
    MoveWord(ZigzagType base, std::vector<Move> moves);

    const ZigzagType& base() const { return base_; }
    const std::vector<Move>& moves() const { return moves_; }
    std::size_t size() const { return moves_.size(); }

    friend bool operator==(const MoveWord&, const MoveWord&) = default;

private:
    ZigzagType base_;
    std::vector<Move> moves_;
};

// A word is minimal when no adjacent pair composes: consecutive moves must
// have distinct junction centers, and two consecutive reversions are only
// irreducible when the tail carries a curve of self-intersection <= -3.
// Isomorphisms are not counted as factors: a word containing one next to
// other moves is not minimal.
bool is_minimal(const MoveWord& w);

// Composes adjacent moves to a fixpoint. The fallback for merged
// fibration-preserving moves keeps them (flagged possibly-identity); a
// family-specific composer may resolve such pairs exactly and must return an
// identity Isomorphism only for the genuine identity.
using FiberedComposer =
    std::function<std::optional<Move>(const FiberedModification&, const FiberedModification&)>;

MoveWord reduce(const MoveWord& w, const FiberedComposer& composer = {});

// Boundary types after each move: reversions reverse the tail, everything
// else fixes it.
std::vector<ZigzagType> type_trace(const MoveWord& w);

ZigzagType final_type(const MoveWord& w);

// Formal inverse: moves reversed with centers swapped, based at the final
// type of w.
MoveWord invert_word(const MoveWord& w);

MoveWord concat(const MoveWord& a, const MoveWord& b);

std::size_t reversion_count(const MoveWord& w);

} // namespace zzag
