#include "onerel/embed.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "onerel/magnus.hpp"

namespace onerel {

namespace {

struct Slot {
    const std::vector<std::int32_t>* doubled;
    std::size_t offset;
    std::size_t len;

    std::int32_t at(std::size_t i) const { return (*doubled)[offset + i]; }
};

bool slot_less(const Slot& a, const Slot& b) {
    const std::size_t m = std::min(a.len, b.len);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.at(i) != b.at(i)) return a.at(i) < b.at(i);
    }
    return a.len < b.len;
}

std::size_t slot_lcp(const Slot& a, const Slot& b) {
    const std::size_t m = std::min(a.len, b.len);
    std::size_t i = 0;
    while (i < m && a.at(i) == b.at(i)) ++i;
    return i;
}

}  // namespace

std::size_t max_piece_length(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("max_piece_length: empty word set");
    std::vector<std::vector<std::int32_t>> doubled;
    std::vector<std::size_t> lens;
    for (const Word& w : words) {
        if (w.empty()) throw std::invalid_argument("max_piece_length: empty word");
        if (!w.is_cyclically_reduced())
            throw std::invalid_argument("max_piece_length: words must be cyclically reduced");
        for (const Word& v : {w, w.inverse()}) {
            std::vector<std::int32_t> d;
            d.reserve(2 * v.size());
            for (int rep = 0; rep < 2; ++rep)
                for (Letter l : v.letters()) d.push_back(l.code());
            doubled.push_back(std::move(d));
            lens.push_back(v.size());
        }
    }
    std::vector<Slot> slots;
    for (std::size_t s = 0; s < doubled.size(); ++s)
        for (std::size_t o = 0; o < lens[s]; ++o) slots.push_back({&doubled[s], o, lens[s]});
    std::sort(slots.begin(), slots.end(), slot_less);
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < slots.size(); ++i)
        best = std::max(best, slot_lcp(slots[i], slots[i + 1]));
    return best;
}

bool check_small_cancellation(const std::vector<Word>& words, const BigInt& lambda_num,
                              const BigInt& lambda_den) {
    if (lambda_num <= 0 || lambda_den <= 0)
        throw std::invalid_argument("check_small_cancellation: lambda must be positive");
    std::size_t piece = max_piece_length(words);
    std::size_t min_len = SIZE_MAX;
    for (const Word& w : words) min_len = std::min(min_len, w.size());
    return BigInt(piece) * lambda_den < lambda_num * BigInt(min_len);
}

namespace {

void append_power(std::vector<Letter>& out, Letter base, std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) out.push_back(base);
}

Word family_word(int k, int n, int which) {
    // which: 1 -> w_1 shape, k -> w_k shape, else middle w_i shape
    const Letter a(Generator(1), 1), ainv(Generator(1), -1), b(Generator(2), 1);
    std::vector<Letter> out;
    auto block = [&](std::int64_t a_exp, int b_count) {
        append_power(out, a_exp > 0 ? a : ainv, a_exp > 0 ? a_exp : -a_exp);
        append_power(out, b, b_count);
    };
    if (which == 1) {
        for (int e = 1; e <= n + 1; ++e) block(e, 1);
        for (int e = -(n + 1); e <= -1; ++e) block(e, 1);
    } else if (which == k) {
        for (int e = 1; e <= n; ++e) block(e, k);
        for (int e = -n; e <= -2; ++e) block(e, k);
    } else {
        for (int e = 1; e <= n; ++e) block(e, which);
        for (int e = -n; e <= -1; ++e) block(e, which);
    }
    return Word(std::move(out), 2);
}

}  // namespace

WordFamily build_word_family(int k, int n) {
    if (k < 2) throw std::invalid_argument("build_word_family: k must be >= 2");
    if (n < 1) throw std::invalid_argument("build_word_family: n must be >= 1");
    WordFamily f;
    f.k = k;
    f.n = n;
    for (int i = 1; i <= k; ++i) f.words.push_back(family_word(k, n, i));

    f.max_piece = max_piece_length(f.words);
    f.cond_small_cancellation = check_small_cancellation(f.words, 1, 12);

    f.cond_exponent_sums = true;
    for (int i = 1; i <= k; ++i) {
        std::int64_t expect = i == k ? 1 : 0;
        if (exponent_sum(f.words[static_cast<std::size_t>(i - 1)], Generator(1)) != expect)
            f.cond_exponent_sums = false;
    }

    const BigInt expected = BigInt(n + 1) * (n + 2) / 2;
    f.w1_max_index = expected;
    f.cond_max_index = true;
    BigInt w1_max;
    {
        auto idx = prefix_indices(f.words[0], Generator(1), Generator(2));
        w1_max = *std::max_element(idx.begin(), idx.end());
        std::size_t hits = 0;
        for (const auto& v : idx)
            if (v == w1_max) ++hits;
        if (w1_max != expected || hits != 1) f.cond_max_index = false;
    }
    for (int i = 2; i <= k && f.cond_max_index; ++i) {
        auto idx = prefix_indices(f.words[static_cast<std::size_t>(i - 1)], Generator(1), Generator(2));
        if (*std::max_element(idx.begin(), idx.end()) >= w1_max) f.cond_max_index = false;
    }

    f.verified = f.cond_small_cancellation && f.cond_exponent_sums && f.cond_max_index;
    return f;
}

namespace {

// Analytic ceiling: the smallest n with 12*(2n+3+k) < n^2 always verifies.
int analytic_family_bound(int k) {
    int n = 1;
    while (!(BigInt(12) * (2 * n + 3 + k) < BigInt(n) * n)) ++n;
    return n;
}

std::map<std::pair<int, int>, WordFamily>& family_cache() {
    static std::map<std::pair<int, int>, WordFamily> cache;
    return cache;
}
std::mutex family_mutex;

WordFamily cached_family(int k, int n) {
    std::lock_guard<std::mutex> lock(family_mutex);
    auto& cache = family_cache();
    auto it = cache.find({k, n});
    if (it != cache.end()) return it->second;
    WordFamily f = build_word_family(k, n);
    cache.emplace(std::make_pair(k, n), f);
    return f;
}

}  // namespace

WordFamily minimal_verified_family(int k, int n_min) {
    const int cap = std::max(n_min, analytic_family_bound(k)) + 8;
    for (int n = std::max(1, n_min); n <= cap; ++n) {
        WordFamily f = cached_family(k, n);
        if (f.verified) return f;
    }
    throw verification_error("no verified word family up to the analytic bound for k=" +
                             std::to_string(k));
}

Word substitute(const Word& relator, const WordFamily& family) {
    if (!family.verified) throw std::invalid_argument("substitute: family is not verified");
    if (relator.rank() != family.k)
        throw std::invalid_argument("substitute: relator rank must match family size");
    if (!relator.is_cyclically_reduced())
        throw std::invalid_argument("substitute: relator must be cyclically reduced");
    std::vector<Letter> out;
    std::size_t upper = 0;
    for (Letter l : relator.letters())
        upper += family.words[static_cast<std::size_t>(l.gen() - 1)].size();
    out.reserve(upper);
    auto push = [&out](Letter l) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    };
    for (Letter l : relator.letters()) {
        const Word& w = family.words[static_cast<std::size_t>(l.gen() - 1)];
        if (l.sign() > 0)
            for (Letter x : w.letters()) push(x);
        else
            for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
                push(it->inverse());
    }
    return Word(std::move(out), 2);
}

Word z_extend(const Word& relator, const std::vector<BigInt>& normal) {
    const int k = relator.rank();
    if (normal.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("z_extend: normal has wrong dimension");
    auto sums = exponent_sums(relator);
    BigInt dot = 0;
    for (int i = 0; i < k; ++i) dot += normal[static_cast<std::size_t>(i)] * sums[static_cast<std::size_t>(i)];
    if (dot != 0)
        throw std::invalid_argument("z_extend: normal is not orthogonal to the displacement");
    std::vector<std::int64_t> pow(static_cast<std::size_t>(k));
    std::size_t upper = relator.size();
    for (int i = 0; i < k; ++i) {
        pow[static_cast<std::size_t>(i)] = to_int64(normal[static_cast<std::size_t>(i)]);
        upper += static_cast<std::size_t>(std::llabs(pow[static_cast<std::size_t>(i)])) * relator.size();
    }
    const Letter z(Generator(k + 1), 1), zinv(Generator(k + 1), -1);
    std::vector<Letter> out;
    out.reserve(std::min<std::size_t>(upper, relator.size() * 4 + 16));
    auto push = [&out](Letter l) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    };
    for (Letter l : relator.letters()) {
        const std::int64_t p = pow[static_cast<std::size_t>(l.gen() - 1)];
        if (l.sign() > 0) {
            push(Letter(Generator(l.gen()), 1));
            for (std::int64_t j = 0; j < (p > 0 ? p : -p); ++j) push(p > 0 ? z : zinv);
        } else {
            for (std::int64_t j = 0; j < (p > 0 ? p : -p); ++j) push(p > 0 ? zinv : z);
            push(Letter(Generator(l.gen()), -1));
        }
    }
    return Word(std::move(out), k + 1);
}

namespace {

Word apply_permutation(const Word& w, const std::vector<int>& role_of) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w.letters())
        out.push_back(Letter(Generator(role_of[static_cast<std::size_t>(l.gen() - 1)]), l.sign()));
    return Word(std::move(out), w.rank());
}

BigInt max_index_of(const IndexedWord& iw, int gen, bool* present = nullptr) {
    BigInt best = 0;
    bool seen = false;
    for (const auto& l : iw.letters) {
        if (l.gen != gen) continue;
        if (!seen || l.magnus_index > best) best = l.magnus_index;
        seen = true;
    }
    if (present) *present = seen;
    return best;
}

// Largest z-prefix value that any pivot occurrence contributes to the final
// substitution: the prefix sum before a positive pivot letter, one less for a
// negative one.
std::optional<BigInt> max_pivot_prefix(const Word& w, int pivot) {
    BigInt prefix = 0;
    std::optional<BigInt> best;
    for (Letter l : w.letters()) {
        if (l.gen() == pivot) {
            BigInt val = l.sign() > 0 ? prefix : prefix - 1;
            if (!best || val > *best) best = val;
            prefix += l.sign();
        }
    }
    return best;
}

}  // namespace

EmbeddingWitness embed_to_two_generators(const Word& relator) {
    Verdict verdict = embeddable_criterion(relator);
    if (verdict.kind != VerdictKind::Embeddable)
        throw verification_error("embed: relator has no touching hyperplane (verdict " +
                                 to_string(verdict.kind) + ")");
    EmbeddingWitness wit;
    wit.input = relator;
    wit.core = verdict.core;
    wit.certificate = *verdict.touching;
    const int k = relator.rank();
    const int t = wit.certificate.letter.index;
    auto say = [&wit](const std::string& s) { wit.transcript.push_back(s); };
    say("core: " + format_word(wit.core));
    say("touching certificate on letter x" + std::to_string(t));

    // (a) rotate the core so the certified edge is the first letter
    Walk core_walk = trace_walk(wit.core);
    if (wit.certificate.kind == TouchingCertificate::Kind::SimpleEdge) {
        wit.rotation = wit.certificate.position;
    } else {
        LetterTrace lt = letter_trace(core_walk, Generator(t));
        std::vector<std::size_t> incident;
        for (std::size_t e : lt.edges)
            if (core_walk.vertex(e) == wit.certificate.element ||
                core_walk.vertex(e + 1) == wit.certificate.element)
                incident.push_back(e);
        if (incident.size() != 1)
            throw verification_error("embed: certified vertex is not simple in w_t");
        wit.rotation = incident.front();
    }
    wit.rotated = wit.core.rotated(wit.rotation);
    say("rotated by " + std::to_string(wit.rotation) + ": certified edge is letter 0");

    // (b) z extension; conjugate away any seam cancellation
    Word ext = cyclic_reduce(z_extend(wit.rotated, wit.certificate.normal)).core;

    // (c) relabel: x_t takes role 1, z stays the pivot k+1
    wit.role_of.assign(static_cast<std::size_t>(k + 1), 0);
    wit.role_of[static_cast<std::size_t>(t - 1)] = 1;
    wit.role_of[static_cast<std::size_t>(k)] = k + 1;
    int next = 2;
    for (int g = 1; g <= k; ++g)
        if (g != t) wit.role_of[static_cast<std::size_t>(g - 1)] = next++;
    wit.z_extended = apply_permutation(ext, wit.role_of);
    say("z-extended and relabeled: " + std::to_string(wit.z_extended.size()) + " letters");

    const Generator pivot(k + 1);
    if (exponent_sum(wit.z_extended, pivot) != 0)
        throw verification_error("embed: pivot exponent sum is nonzero after z extension");

    // (d) shift automorphisms for strict dominance of x_1's maximal index
    Word current = wit.z_extended;
    {
        IndexedWord iw = magnus_rewrite(current, pivot);
        MagnusMax m1 = max_magnus_index(iw, Generator(1));
        if (!m1.unique)
            throw verification_error("embed: maximal pivot-index of x_1 is not unique");
    }
    for (int g = 2; g <= k; ++g) {
        IndexedWord iw = magnus_rewrite(current, pivot);
        bool present = false;
        BigInt mg = max_index_of(iw, g, &present);
        if (!present) continue;
        BigInt m1 = max_index_of(iw, 1);
        if (mg < m1) continue;
        std::int64_t amount = to_int64(mg - m1 + 1);
        current = cyclic_reduce(shift_automorphism(current, Generator(g), amount, pivot)).core;
        wit.shifts.push_back({g, amount});
        say("shift x" + std::to_string(g) + " by z^" + std::to_string(amount));
    }
    wit.shifted = current;
    IndexedWord iw = magnus_rewrite(wit.shifted, pivot);
    MagnusMax m1 = max_magnus_index(iw, Generator(1));
    if (!m1.unique || !m1.strictly_dominant)
        throw verification_error("embed: x_1's maximal pivot-index is not uniquely dominant");
    wit.target_max_index = m1.max;
    say("maximal pivot-index of x_1 is " + m1.max.str() + ", unique and dominant");

    // (e) family size: large enough that pivot occurrences cannot tie the
    // substituted maximum, then minimal verified
    int n_min = 1;
    if (auto zp = max_pivot_prefix(wit.shifted, k + 1)) {
        BigInt need = *zp - m1.max;
        if (need > 0) n_min = static_cast<int>(to_int64(need));
    }
    wit.family = minimal_verified_family(k + 1, n_min);
    wit.family_n = wit.family.n;
    say("word family: k=" + std::to_string(k + 1) + ", n=" + std::to_string(wit.family_n) +
        ", max piece " + std::to_string(wit.family.max_piece));

    // (f) substitute and run the rank-2 criterion
    wit.final_relator = substitute(wit.shifted, wit.family);
    say("final relator: " + std::to_string(wit.final_relator.size()) + " letters");
    wit.brown = brown_criterion(wit.final_relator);
    if (wit.brown.kind != VerdictKind::AscendingHNN)
        throw verification_error("embed: final relator failed the supporting-line criterion (" +
                                 to_string(wit.brown.kind) + ")");
    if (!verify_verdict(wit.brown))
        throw verification_error("embed: final supporting-line witness failed revalidation");
    say("final relator passes the rank-2 criterion");
    return wit;
}

bool verify_witness(const EmbeddingWitness& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (cyclic_reduce(w.input).core != w.core) return fail("core mismatch");
    Walk core_walk = trace_walk(w.core);
    if (!check_touching_certificate(core_walk, w.certificate))
        return fail("touching certificate failed");
    if (w.core.rotated(w.rotation) != w.rotated) return fail("rotation mismatch");
    if (w.rotated[0].gen() != w.certificate.letter.index)
        return fail("rotation does not start at the certified letter");
    const int k = w.input.rank();
    Word ext;
    try {
        ext = cyclic_reduce(z_extend(w.rotated, w.certificate.normal)).core;
    } catch (const std::exception& e) {
        return fail(std::string("z extension failed: ") + e.what());
    }
    std::vector<int> identity_check = w.role_of;
    std::sort(identity_check.begin(), identity_check.end());
    for (int g = 1; g <= k + 1; ++g)
        if (identity_check[static_cast<std::size_t>(g - 1)] != g)
            return fail("role assignment is not a permutation");
    if (apply_permutation(ext, w.role_of) != w.z_extended) return fail("z-extension mismatch");
    const Generator pivot(k + 1);
    Word current = w.z_extended;
    for (const auto& s : w.shifts) {
        if (s.gen < 2 || s.gen > k) return fail("shift on an invalid generator");
        current = cyclic_reduce(shift_automorphism(current, Generator(s.gen), s.amount, pivot)).core;
    }
    if (current != w.shifted) return fail("shift chain mismatch");
    if (exponent_sum(w.shifted, pivot) != 0) return fail("pivot exponent sum nonzero");
    IndexedWord iw = magnus_rewrite(w.shifted, pivot);
    MagnusMax m1 = max_magnus_index(iw, Generator(1));
    if (!m1.unique || !m1.strictly_dominant) return fail("x_1 index not uniquely dominant");
    if (m1.max != w.target_max_index) return fail("recorded maximal index mismatch");
    if (auto zp = max_pivot_prefix(w.shifted, k + 1)) {
        if (*zp - m1.max > w.family_n) return fail("family parameter below the pivot bound");
    }
    WordFamily fresh = build_word_family(k + 1, w.family_n);
    if (!fresh.verified) return fail("family conditions do not verify");
    if (fresh.words != w.family.words) return fail("family words mismatch");
    Word final2 = substitute(w.shifted, fresh);
    if (final2 != w.final_relator) return fail("final relator mismatch");
    // abelianization consistency of the substitution
    {
        auto rs = exponent_sums(w.shifted);
        BigInt ea = 0, eb = 0;
        for (int i = 0; i <= k; ++i) {
            auto ws = exponent_sums(fresh.words[static_cast<std::size_t>(i)]);
            ea += BigInt(rs[static_cast<std::size_t>(i)]) * ws[0];
            eb += BigInt(rs[static_cast<std::size_t>(i)]) * ws[1];
        }
        auto fs = exponent_sums(w.final_relator);
        if (ea != fs[0] || eb != fs[1]) return fail("abelianization mismatch");
    }
    Verdict fresh_brown = brown_criterion(w.final_relator);
    if (fresh_brown.kind != VerdictKind::AscendingHNN)
        return fail("final relator does not pass the rank-2 criterion");
    if (!verify_verdict(fresh_brown)) return fail("rank-2 witness failed revalidation");
    return true;
}

Presentation hkiw_presentation(int k, int i, const Word& w) {
    if (k < 1) throw std::invalid_argument("hkiw_presentation: k must be >= 1");
    if (i < 1 || i > k) throw std::invalid_argument("hkiw_presentation: i must be in [1, k]");
    if (w.empty()) throw std::invalid_argument("hkiw_presentation: w must be nonempty");
    if (w.rank() > k) throw std::invalid_argument("hkiw_presentation: w must be a word in a_1..a_k");

    const int t_idx = k + 1;
    Presentation p;
    for (int g = 1; g <= k; ++g) p.generators.push_back("a" + std::to_string(g));
    p.generators.push_back("t");

    auto conj_relator = [&](const Word& lhs, const Word& rhs) {
        // t lhs t^-1 rhs^-1, reduced
        Word tw({Letter(Generator(t_idx), 1)}, t_idx);
        Word tinv({Letter(Generator(t_idx), -1)}, t_idx);
        return free_reduce(tw.concat(lhs.with_rank(t_idx)).concat(tinv).concat(
            rhs.with_rank(t_idx).inverse()));
    };
    auto gen_word = [&](int g) { return Word({Letter(Generator(g), 1)}, k); };

    std::vector<std::pair<std::string, std::string>> display_eqs;
    auto word_name = [&](const Word& v) {
        std::string s;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) s += " ";
            s += (v[j].gen() == t_idx ? "t" : "a" + std::to_string(v[j].gen()));
            if (v[j].sign() < 0) s += "^-1";
        }
        return s.empty() ? std::string("1") : s;
    };

    for (int j = 1; j < i; ++j) {
        p.relators.push_back(conj_relator(gen_word(j), gen_word(j + 1)));
        display_eqs.push_back({"t a" + std::to_string(j) + " t^-1", "a" + std::to_string(j + 1)});
    }
    p.relators.push_back(conj_relator(gen_word(i), w));
    display_eqs.push_back({"t a" + std::to_string(i) + " t^-1", word_name(w)});
    const int wrap = i % k + 1;  // the display's a_{i+1}; closes the chain when i == k
    p.relators.push_back(conj_relator(w, gen_word(wrap)));
    display_eqs.push_back({"t " + word_name(w) + " t^-1", "a" + std::to_string(wrap)});
    for (int j = i + 1; j < k; ++j) {
        p.relators.push_back(conj_relator(gen_word(j), gen_word(j + 1)));
        display_eqs.push_back({"t a" + std::to_string(j) + " t^-1", "a" + std::to_string(j + 1)});
    }

    std::ostringstream out;
    out << "< ";
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        if (g) out << ", ";
        out << p.generators[g];
    }
    out << " | ";
    for (std::size_t r = 0; r < display_eqs.size(); ++r) {
        if (r) out << ", ";
        out << display_eqs[r].first << " = " << display_eqs[r].second;
    }
    out << " >";
    p.display = out.str();
    return p;
}

}  // namespace onerel
