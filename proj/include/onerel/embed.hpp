#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onerel/criteria.hpp"
#include "onerel/hull.hpp"
#include "onerel/word.hpp"

namespace onerel {

// Raised when a pipeline step's recorded condition fails to verify.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Longest piece of the symmetrized set (every cyclic shift of every word and
// of every inverse): the longest common prefix of two distinct elements, or
// of one element read from two distinct positions. Inputs must be nonempty
// and cyclically reduced.
std::size_t max_piece_length(const std::vector<Word>& words);

// C'(lambda): max piece < lambda * (minimum word length), exact comparison.
bool check_small_cancellation(const std::vector<Word>& words, const BigInt& lambda_num,
                              const BigInt& lambda_den);

// The rank-2 word family substituted for x_1..x_k. Shapes (a = x1, b = x2):
//   w_1 = a b a^2 b ... a^n b a^{n+1} b a^{-n-1} b a^{-n} b ... a^-2 b a^-1 b
//   w_i = a b^i a^2 b^i ... a^n b^i a^{-n} b^i ... a^-2 b^i a^-1 b^i   (1 < i < k)
//   w_k = a b^k a^2 b^k ... a^n b^k a^{-n} b^k ... a^-2 b^k
struct WordFamily {
    std::vector<Word> words;  // w_1 .. w_k over rank 2
    int k = 0;
    int n = 0;
    bool verified = false;
    bool cond_small_cancellation = false;  // symmetrized C'(1/12)
    bool cond_exponent_sums = false;       // a-sums (0,...,0,1)
    bool cond_max_index = false;           // w_1's max a-index of b is (n+1)(n+2)/2, unique, dominant
    BigInt w1_max_index;
    std::size_t max_piece = 0;
};

WordFamily build_word_family(int k, int n);

// Smallest n >= n_min whose family verifies all three conditions.
WordFamily minimal_verified_family(int k, int n_min = 1);

// Replaces x_i^{+-1} by w_i^{+-1} and freely reduces. Requires a verified
// family of matching rank and a cyclically reduced relator.
Word substitute(const Word& relator, const WordFamily& family);

// x_i -> x_i z^{normal[i]} with z a fresh generator of index rank+1, freely
// reduced. Requires <normal, displacement(relator)> = 0.
Word z_extend(const Word& relator, const std::vector<BigInt>& normal);

struct ShiftRecord {
    int gen;
    std::int64_t amount;
};

struct EmbeddingWitness {
    Word input;                    // rank k
    Word core;                     // cyclically reduced input
    TouchingCertificate certificate;
    std::size_t rotation = 0;      // left rotation aligning the certified edge with letter 0
    Word rotated;
    std::vector<int> role_of;      // role_of[old-1] = new generator index after relabeling
    Word z_extended;               // rank k+1, relabeled and cyclically reduced
    std::vector<ShiftRecord> shifts;
    Word shifted;                  // after the shift automorphisms
    BigInt target_max_index;       // max pivot-index of x_1 in `shifted`
    int family_n = 0;
    WordFamily family;             // k+1 words over rank 2
    Word final_relator;            // rank 2
    Verdict brown;                 // AscendingHNN verdict on final_relator
    std::vector<std::string> transcript;
};

// Full chain: touching certificate -> z extension -> relabeling -> shift
// automorphisms -> substitution by a verified family -> rank-2 relator that
// passes the supporting-line criterion. Every condition is re-checked along
// the way; failures raise verification_error.
EmbeddingWitness embed_to_two_generators(const Word& relator);

// Re-derives every recorded step from the witness's stored inputs.
bool verify_witness(const EmbeddingWitness& w, std::string* why = nullptr);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;  // over rank k+1 (a_1..a_k, t)
    std::string display;
};

// The HNN-style presentation on a_1..a_k, t whose t-conjugation chain sends
// a_1 -> ... -> a_i -> w -> a_{i+1} -> ... (indices wrap at k). k+1 relators.
Presentation hkiw_presentation(int k, int i, const Word& w);

}  // namespace onerel
