#include "onerel/magnus.hpp"

#include <stdexcept>

namespace onerel {

IndexedWord magnus_rewrite(const Word& w, Generator pivot) {
    if (exponent_sum(w, pivot) != 0)
        throw std::invalid_argument("magnus_rewrite: pivot exponent sum must be 0");
    IndexedWord out{{}, pivot, w};
    BigInt prefix = 0;
    for (Letter l : w.letters()) {
        if (l.gen() == pivot.index) {
            prefix += l.sign();
        } else {
            out.letters.push_back({l.gen(), l.sign(), prefix});
        }
    }
    return out;
}

MagnusMax max_magnus_index(const IndexedWord& iw, Generator target) {
    MagnusMax r;
    bool seen = false;
    for (const auto& l : iw.letters) {
        if (l.gen != target.index) continue;
        if (!seen || l.magnus_index > r.max) {
            r.max = l.magnus_index;
            r.unique = true;
            seen = true;
        } else if (l.magnus_index == r.max) {
            r.unique = false;
        }
    }
    if (!seen) throw std::invalid_argument("max_magnus_index: target does not occur");
    r.strictly_dominant = true;
    for (const auto& l : iw.letters) {
        if (l.gen == target.index) continue;
        if (l.magnus_index >= r.max) {
            r.strictly_dominant = false;
            break;
        }
    }
    return r;
}

Word shift_automorphism(const Word& w, Generator i, std::int64_t m, Generator pivot) {
    if (i == pivot) throw std::invalid_argument("shift_automorphism: i must differ from pivot");
    if (m == 0) return free_reduce(w);
    std::vector<Letter> out;
    out.reserve(w.size());
    auto push = [&out](Letter l) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    };
    const Letter piv_pos(pivot, 1), piv_neg(pivot, -1);
    const std::int64_t a = m > 0 ? m : -m;
    for (Letter l : w.letters()) {
        if (l.gen() == i.index) {
            for (std::int64_t j = 0; j < a; ++j) push(m > 0 ? piv_neg : piv_pos);
            push(l);
            for (std::int64_t j = 0; j < a; ++j) push(m > 0 ? piv_pos : piv_neg);
        } else {
            push(l);
        }
    }
    return Word(std::move(out), w.rank());
}

std::vector<BigInt> prefix_indices(const Word& w, Generator pivot, Generator target) {
    std::vector<BigInt> out;
    BigInt prefix = 0;
    for (Letter l : w.letters()) {
        if (l.gen() == pivot.index)
            prefix += l.sign();
        else if (l.gen() == target.index)
            out.push_back(prefix);
    }
    return out;
}

}  // namespace onerel
