#pragma once

#include <cstdint>
#include <string>

#include "onerel/bigint.hpp"
#include "onerel/word.hpp"

namespace onerel {

// NR: uniform over reduced words (the non-backtracking walks). NB is the same
// sampler kept as the named building block. CR: uniform over cyclically
// reduced words, i.e. non-backtracking with last letter not inverse of the
// first.
enum class Model { NR, NB, CR };

Model parse_model(const std::string& name);  // "nr" | "nb" | "cr"; "ic" is rejected
std::string to_string(Model m);

// xoshiro256++ seeded through splitmix64 from (seed, stream). Identical
// (seed, stream, draw sequence) gives identical output on every platform.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
    BigInt below_big(const BigInt& bound);

private:
    std::uint64_t s_[4];
};

// Exact cardinality of the model's word set.
BigInt count_words(Model model, int n, int k);

// Exactly uniform sample. CR uses sequential transfer-matrix weights
// conditioned on the (first, last) compatibility, not rejection.
Word sample_word(Model model, int n, int k, SeededRng& rng);

// Uniform over all (2k)^n raw letter strings; used by the invariance sweeps.
Word sample_raw_word(int n, int k, SeededRng& rng);

// Precomputes the CR completion tables so later calls are lock-free reads.
void warm_cr_tables(int n, int k);

}  // namespace onerel
