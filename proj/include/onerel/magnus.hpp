#pragma once

#include <cstdint>
#include <vector>

#include "onerel/bigint.hpp"
#include "onerel/word.hpp"

namespace onerel {

// Magnus rewriting with respect to a pivot generator whose exponent sum is
// zero. The index of a non-pivot letter is the pivot-exponent sum of the
// strict prefix before that occurrence. Under shift_automorphism(w, i, m,
// pivot) the indices of x_i move by exactly -m; everything else is unchanged.

struct IndexedLetter {
    std::int32_t gen;   // != pivot
    int sign;           // +1 or -1
    BigInt magnus_index;
};

struct IndexedWord {
    std::vector<IndexedLetter> letters;
    Generator pivot;
    Word source;
};

struct MagnusMax {
    BigInt max;
    bool unique = false;             // exactly one occurrence of the target attains it
    bool strictly_dominant = false;  // max exceeds every index of every other non-pivot generator
};

// Requires exponent_sum(w, pivot) == 0.
IndexedWord magnus_rewrite(const Word& w, Generator pivot);

// Requires the target to occur in iw.
MagnusMax max_magnus_index(const IndexedWord& iw, Generator target);

// Every x_i^{+-1} becomes pivot^-m x_i^{+-1} pivot^m, freely reduced.
Word shift_automorphism(const Word& w, Generator i, std::int64_t m, Generator pivot);

// Prefix pivot-exponent sums at the occurrences of a target letter, defined
// for any word (no zero-sum requirement). Used by the word-family checks.
std::vector<BigInt> prefix_indices(const Word& w, Generator pivot, Generator target);

}  // namespace onerel
