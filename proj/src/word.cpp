#include "onerel/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace onerel {

Word::Word(std::vector<Letter> letters, int rank) : letters_(std::move(letters)), rank_(rank) {
    if (rank < 1) throw std::invalid_argument("word rank must be >= 1");
    for (Letter l : letters_) {
        if (l.gen() > rank)
            throw std::invalid_argument("letter x" + std::to_string(l.gen()) +
                                        " exceeds rank " + std::to_string(rank));
    }
}

bool Word::is_reduced() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i + 1] == letters_[i].inverse()) return false;
    return true;
}

bool Word::is_cyclically_reduced() const {
    if (!is_reduced()) return false;
    if (letters_.size() >= 2 && letters_.front() == letters_.back().inverse()) return false;
    return true;
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out), rank_);
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out), std::max(rank_, other.rank_));
}

Word Word::rotated(std::size_t s) const {
    if (letters_.empty()) return *this;
    s %= letters_.size();
    std::vector<Letter> out;
    out.reserve(letters_.size());
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(s), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(s));
    return Word(std::move(out), rank_);
}

Word Word::with_rank(int rank) const { return Word(letters_, rank); }

namespace {

Word parse_compact(const std::string& text, int rank) {
    std::vector<Letter> letters;
    int max_gen = 0;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int gen, sign;
        if (c >= 'a' && c <= 'z') {
            gen = c - 'a' + 1;
            sign = 1;
        } else if (c >= 'A' && c <= 'Z') {
            gen = c - 'A' + 1;
            sign = -1;
        } else {
            throw std::invalid_argument(std::string("unknown token '") + c + "' in compact word");
        }
        max_gen = std::max(max_gen, gen);
        letters.push_back(Letter(Generator(gen), sign));
    }
    if (rank == 0) rank = std::max(max_gen, 1);
    if (max_gen > rank)
        throw std::invalid_argument("generator index " + std::to_string(max_gen) +
                                    " exceeds rank " + std::to_string(rank));
    return Word(std::move(letters), rank);
}

Word parse_indexed(const std::string& text, int rank) {
    std::vector<Letter> letters;
    int max_gen = 0;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
            throw std::invalid_argument("unknown token '" + tok +
                                        "' (expected x<N> or X<N>; formats cannot be mixed)");
        int sign = tok[0] == 'x' ? 1 : -1;
        int gen = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("unknown token '" + tok + "'");
            gen = gen * 10 + (tok[i] - '0');
            if (gen > 1000000) throw std::invalid_argument("generator index too large in '" + tok + "'");
        }
        if (gen < 1) throw std::invalid_argument("generator index must be >= 1 in '" + tok + "'");
        max_gen = std::max(max_gen, gen);
        letters.push_back(Letter(Generator(gen), sign));
    }
    if (rank == 0) rank = std::max(max_gen, 1);
    if (max_gen > rank)
        throw std::invalid_argument("generator index " + std::to_string(max_gen) +
                                    " exceeds rank " + std::to_string(rank));
    return Word(std::move(letters), rank);
}

}  // namespace

Word parse_word(const std::string& text, int rank) {
    bool has_digit = std::any_of(text.begin(), text.end(),
                                 [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    return has_digit ? parse_indexed(text, rank) : parse_compact(text, rank);
}

std::string format_word(const Word& w) {
    std::string out;
    if (w.rank() <= 26) {
        out.reserve(w.size());
        for (Letter l : w.letters())
            out.push_back(static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.gen() - 1));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(' ');
            out.push_back(w[i].sign() > 0 ? 'x' : 'X');
            out += std::to_string(w[i].gen());
        }
    }
    return out;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (Letter l : w.letters()) {
        if (!stack.empty() && stack.back() == l.inverse())
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word(std::move(stack), w.rank());
}

CyclicReduction cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    const auto& ls = r.letters();
    std::size_t i = 0, j = ls.size();
    while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
        ++i;
        --j;
    }
    std::vector<Letter> core(ls.begin() + static_cast<std::ptrdiff_t>(i),
                             ls.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<Letter> conj(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
    return {Word(std::move(core), w.rank()), Word(std::move(conj), w.rank())};
}

std::int64_t exponent_sum(const Word& w, Generator g) {
    std::int64_t s = 0;
    for (Letter l : w.letters())
        if (l.gen() == g.index) s += l.sign();
    return s;
}

std::vector<std::int64_t> exponent_sums(const Word& w) {
    std::vector<std::int64_t> s(static_cast<std::size_t>(w.rank()), 0);
    for (Letter l : w.letters()) s[static_cast<std::size_t>(l.gen() - 1)] += l.sign();
    return s;
}

}  // namespace onerel
