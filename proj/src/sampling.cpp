#include "onerel/sampling.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace onerel {

Model parse_model(const std::string& name) {
    if (name == "nr" || name == "NR") return Model::NR;
    if (name == "nb" || name == "NB") return Model::NB;
    if (name == "cr" || name == "CR") return Model::CR;
    if (name == "ic" || name == "IC")
        throw std::invalid_argument(
            "model ic is not supported: sampling isomorphism-class representatives needs "
            "machinery far beyond this tool, and its limiting event probabilities coincide "
            "with model cr");
    throw std::invalid_argument("unknown model '" + name + "' (expected nr, nb or cr)");
}

std::string to_string(Model m) {
    switch (m) {
        case Model::NR: return "nr";
        case Model::NB: return "nb";
        case Model::CR: return "cr";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int s) { return (x << s) | (x >> (64 - s)); }

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (stream * 0xD2B74407B1CE6E93ULL + 0x9E3779B97F4A7C15ULL);
    for (auto& s : s_) s = splitmix64(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t SeededRng::next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

BigInt SeededRng::below_big(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("below_big: bound must be positive");
    if (bound <= BigInt(UINT64_MAX)) return BigInt(below(bound.convert_to<std::uint64_t>()));
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned nwords = (bits + 63) / 64;
    const unsigned top_bits = bits - (nwords - 1) * 64;
    const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
    std::vector<std::uint64_t> words(nwords);
    BigInt r;
    for (;;) {
        for (unsigned i = 0; i + 1 < nwords; ++i) words[i] = next();
        words[nwords - 1] = next() & top_mask;  // little-endian word order
        boost::multiprecision::import_bits(r, words.begin(), words.end(), 64, false);
        if (r < bound) return r;
    }
}

namespace {

// Completion counts for the cyclically-reduced sampler, collapsed by symmetry
// to three classes of the current letter relative to the forbidden last
// letter f = inverse(first):
//   X(r): current == f, Y(r): current == inverse(f), Z(r): any other letter.
// X(r) counts non-backtracking continuations of length r ending != f, etc.
struct CrTable {
    int k;
    std::deque<BigInt> x, y, z;
};

std::mutex table_mutex;

CrTable& table_for(int k) {
    static std::map<int, std::unique_ptr<CrTable>>* tables =
        new std::map<int, std::unique_ptr<CrTable>>();
    auto& slot = (*tables)[k];
    if (!slot) {
        slot = std::make_unique<CrTable>();
        slot->k = k;
        slot->x.push_back(0);
        slot->y.push_back(1);
        slot->z.push_back(1);
    }
    return *slot;
}

// Ensures entries 0..upto exist; returns the table. Appends never invalidate
// references into the deques, so readers are safe after this call.
CrTable& ensure_table(int k, std::size_t upto) {
    std::lock_guard<std::mutex> lock(table_mutex);
    CrTable& t = table_for(k);
    const BigInt others_from_edge = std::max(2 * k - 2, 0);
    const BigInt others_from_other = std::max(2 * k - 3, 0);
    while (t.x.size() <= upto) {
        const std::size_t r = t.x.size();
        t.x.push_back(t.x[r - 1] + others_from_edge * t.z[r - 1]);
        t.y.push_back(t.y[r - 1] + others_from_edge * t.z[r - 1]);
        t.z.push_back(t.x[r - 1] + t.y[r - 1] + others_from_other * t.z[r - 1]);
    }
    return t;
}

Letter letter_by_index(std::uint64_t i) {
    return Letter(Generator(static_cast<std::int32_t>(i / 2 + 1)), i % 2 == 0 ? 1 : -1);
}

Letter pick_non_backtracking(int k, Letter prev, SeededRng& rng) {
    const Letter banned = prev.inverse();
    std::uint64_t j = rng.below(static_cast<std::uint64_t>(2 * k - 1));
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(2 * k); ++i) {
        Letter cand = letter_by_index(i);
        if (cand == banned) continue;
        if (j == 0) return cand;
        --j;
    }
    throw std::logic_error("pick_non_backtracking: exhausted alphabet");
}

}  // namespace

void warm_cr_tables(int n, int k) {
    if (n >= 2) ensure_table(k, static_cast<std::size_t>(n - 1));
}

BigInt count_words(Model model, int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("count_words: need n >= 0, k >= 1");
    if (n == 0) return 1;
    if (model == Model::NR || model == Model::NB)
        return BigInt(2 * k) * boost::multiprecision::pow(BigInt(2 * k - 1),
                                                          static_cast<unsigned>(n - 1));
    CrTable& t = ensure_table(k, static_cast<std::size_t>(n - 1));
    return BigInt(2 * k) * t.y[static_cast<std::size_t>(n - 1)];
}

Word sample_word(Model model, int n, int k, SeededRng& rng) {
    if (n < 0 || k < 1) throw std::invalid_argument("sample_word: need n >= 0, k >= 1");
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(n));
    if (n == 0) return Word(std::move(letters), k);
    Letter first = letter_by_index(rng.below(static_cast<std::uint64_t>(2 * k)));
    letters.push_back(first);
    if (model == Model::NR || model == Model::NB) {
        for (int pos = 2; pos <= n; ++pos)
            letters.push_back(pick_non_backtracking(k, letters.back(), rng));
        return Word(std::move(letters), k);
    }
    const CrTable& t = ensure_table(k, n >= 2 ? static_cast<std::size_t>(n - 1) : 1);
    const Letter f = first.inverse();
    for (int pos = 2; pos <= n; ++pos) {
        const std::size_t r = static_cast<std::size_t>(n - pos);
        const Letter banned = letters.back().inverse();
        const bool f_ok = f != banned;
        const bool first_ok = first != banned;  // first == inverse(f)
        int m = 2 * k - 2;                      // letters outside {f, inverse(f)}
        if (banned != f && banned != first) --m;
        const BigInt& wx = t.x[r];
        const BigInt& wy = t.y[r];
        const BigInt& wz = t.z[r];
        BigInt total = (f_ok ? wx : BigInt(0)) + (first_ok ? wy : BigInt(0)) + BigInt(m) * wz;
        BigInt u = rng.below_big(total);
        Letter chosen = f;
        if (f_ok && u < wx) {
            chosen = f;
        } else {
            if (f_ok) u -= wx;
            if (first_ok && u < wy) {
                chosen = first;
            } else {
                // uniform among the m admissible "other" letters
                std::uint64_t j = rng.below(static_cast<std::uint64_t>(m));
                bool found = false;
                for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(2 * k); ++i) {
                    Letter cand = letter_by_index(i);
                    if (cand == f || cand == first || cand == banned) continue;
                    if (j == 0) {
                        chosen = cand;
                        found = true;
                        break;
                    }
                    --j;
                }
                if (!found) throw std::logic_error("sample_word: no admissible letter");
            }
        }
        letters.push_back(chosen);
    }
    Word w(std::move(letters), k);
    assert(w.is_cyclically_reduced());
    return w;
}

Word sample_raw_word(int n, int k, SeededRng& rng) {
    if (n < 0 || k < 1) throw std::invalid_argument("sample_raw_word: need n >= 0, k >= 1");
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        letters.push_back(letter_by_index(rng.below(static_cast<std::uint64_t>(2 * k))));
    return Word(std::move(letters), k);
}

}  // namespace onerel
