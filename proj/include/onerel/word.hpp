#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace onerel {

// Generator index, 1-based. Compact letter form maps a..z to 1..26.
struct Generator {
    std::int32_t index = 1;

    explicit Generator(std::int32_t i) : index(i) {
        if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    }
    friend bool operator==(Generator a, Generator b) { return a.index == b.index; }
    friend bool operator!=(Generator a, Generator b) { return a.index != b.index; }
};

// One signed letter x_g^{+1} or x_g^{-1}, packed as +g / -g.
class Letter {
public:
    Letter(Generator g, int sign) : code_(sign >= 0 ? g.index : -g.index) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    }
    static Letter from_code(std::int32_t code) {
        if (code == 0) throw std::invalid_argument("letter code must be nonzero");
        Letter l;
        l.code_ = code;
        return l;
    }

    std::int32_t gen() const { return code_ < 0 ? -code_ : code_; }
    int sign() const { return code_ < 0 ? -1 : 1; }
    std::int32_t code() const { return code_; }
    Letter inverse() const { return from_code(-code_); }

    friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
    friend bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }

private:
    Letter() = default;
    std::int32_t code_ = 1;
};

// A free-group word over x_1..x_rank. Immutable by convention: all
// operations return new words.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> letters, int rank);

    int rank() const { return rank_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    bool is_reduced() const;
    bool is_cyclically_reduced() const;

    Word inverse() const;
    Word concat(const Word& other) const;
    // Left cyclic rotation by s letters: w[s..] + w[..s).
    Word rotated(std::size_t s) const;
    Word with_rank(int rank) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }

private:
    std::vector<Letter> letters_;
    int rank_ = 1;
};

struct CyclicReduction {
    Word core;
    Word conjugator;  // free_reduce(conjugator * core * conjugator^-1) == free_reduce(input)
};

// Token grammar: compact ("abAB", lowercase = positive, uppercase = inverse,
// rank capped at 26) or indexed ("x3 X12", whitespace separated, no cap).
// Mixing the two forms in one input is an error. rank == 0 means infer the
// smallest covering rank.
Word parse_word(const std::string& text, int rank = 0);

// Canonical form: compact when rank <= 26, indexed otherwise.
std::string format_word(const Word& w);

Word free_reduce(const Word& w);
CyclicReduction cyclic_reduce(const Word& w);
std::int64_t exponent_sum(const Word& w, Generator g);
std::vector<std::int64_t> exponent_sums(const Word& w);

}  // namespace onerel
