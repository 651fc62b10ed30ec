#include "onerel/serialize.hpp"

namespace onerel {

json to_json(const Rational& r) {
    return json::array({to_int64(boost::multiprecision::numerator(r)),
                        to_int64(boost::multiprecision::denominator(r))});
}

json to_json(const BigInt& v) { return to_int64(v); }

json to_json(const Word& w) {
    return json{{"word", format_word(w)}, {"rank", w.rank()}, {"length", w.size()}};
}

json to_json(const Walk& w) {
    json vertices = json::array();
    for (std::size_t i = 0; i <= w.length(); ++i) {
        json v = json::array();
        for (int a = 0; a < w.rank(); ++a) v.push_back(w.coord(i, a));
        vertices.push_back(std::move(v));
    }
    return json{{"rank", w.rank()}, {"vertices", vertices}, {"displacement", w.displacement()}};
}

json to_json(const ZeroCell& c) {
    json projected = json::array();
    for (const auto& r : c.projected) projected.push_back(to_json(r));
    json projecting = json::array();
    for (const auto& [p, mult] : c.projecting)
        projecting.push_back(json{{"point", p}, {"multiplicity", mult}});
    json normal = json::array();
    for (const auto& e : c.normal) normal.push_back(to_json(e));
    return json{{"projected", projected},
                {"projecting", projecting},
                {"total_multiplicity", c.total_multiplicity},
                {"normal", normal},
                {"support_value", to_json(c.support_value)}};
}

json to_json(const HullReport& r) {
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back(to_json(c));
    return json{{"zero_cells", cells}, {"is_bad", r.is_bad}};
}

json to_json(const TouchingCertificate& c) {
    json normal = json::array();
    for (const auto& e : c.normal) normal.push_back(to_json(e));
    return json{{"letter", c.letter.index},
                {"kind", c.kind == TouchingCertificate::Kind::SimpleVertex ? "SimpleVertex"
                                                                           : "SimpleEdge"},
                {"normal", normal},
                {"support_value", to_json(c.support_value)},
                {"position", c.position},
                {"element", c.element}};
}

json to_json(const BrownWitness& w) {
    json normal = json::array();
    for (const auto& e : w.normal) normal.push_back(to_json(e));
    return json{{"normal", normal},
                {"line_value", to_json(w.line_value)},
                {"kind", w.is_edge ? "SimpleEdge" : "SimpleVertex"},
                {"position", w.position}};
}

json to_json(const Verdict& v) {
    json out{{"kind", to_string(v.kind)}, {"core", format_word(v.core)}};
    if (v.touching) out["certificate"] = to_json(*v.touching);
    if (v.brown) out["certificate"] = to_json(*v.brown);
    out["transcript"] = v.transcript;
    return out;
}

json to_json(const IndexedWord& iw) {
    json letters = json::array();
    for (const auto& l : iw.letters)
        letters.push_back(json{{"gen", l.gen}, {"sign", l.sign}, {"index", to_json(l.magnus_index)}});
    return json{{"pivot", iw.pivot.index}, {"source", format_word(iw.source)}, {"letters", letters}};
}

json to_json(const WordFamily& f) {
    json words = json::array();
    for (const auto& w : f.words) words.push_back(format_word(w));
    return json{{"k", f.k},
                {"n", f.n},
                {"words", words},
                {"verified", f.verified},
                {"small_cancellation", f.cond_small_cancellation},
                {"exponent_sums", f.cond_exponent_sums},
                {"max_index_condition", f.cond_max_index},
                {"w1_max_index", to_json(f.w1_max_index)},
                {"max_piece", f.max_piece}};
}

json to_json(const EmbeddingWitness& w) {
    json shifts = json::array();
    for (const auto& s : w.shifts) shifts.push_back(json{{"gen", s.gen}, {"amount", s.amount}});
    return json{{"input", to_json(w.input)},
                {"core", format_word(w.core)},
                {"certificate", to_json(w.certificate)},
                {"rotation", w.rotation},
                {"rotated", format_word(w.rotated)},
                {"roles", w.role_of},
                {"z_extended", to_json(w.z_extended)},
                {"shifts", shifts},
                {"shifted", to_json(w.shifted)},
                {"target_max_index", to_json(w.target_max_index)},
                {"family", to_json(w.family)},
                {"final_relator", to_json(w.final_relator)},
                {"brown", to_json(w.brown)},
                {"transcript", w.transcript}};
}

json to_json(const Presentation& p) {
    json relators = json::array();
    for (const auto& r : p.relators) relators.push_back(format_word(r));
    return json{{"generators", p.generators}, {"relators", relators}, {"display", p.display}};
}

}  // namespace onerel
