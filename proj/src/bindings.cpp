#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onerel/criteria.hpp"
#include "onerel/embed.hpp"
#include "onerel/experiments.hpp"
#include "onerel/hull.hpp"
#include "onerel/magnus.hpp"
#include "onerel/serialize.hpp"
#include "onerel/svg.hpp"

namespace py = pybind11;
using onerel::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::object big_to_py(const onerel::BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

onerel::Word parse(const std::string& text, int rank) { return onerel::parse_word(text, rank); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact criteria, embeddings and experiments for one-relator groups";

    m.def("free_reduce",
          [](const std::string& w, int rank) {
              return onerel::format_word(onerel::free_reduce(parse(w, rank)));
          },
          py::arg("word"), py::arg("rank") = 0);
    m.def("cyclic_reduce",
          [](const std::string& w, int rank) {
              auto r = onerel::cyclic_reduce(parse(w, rank));
              return py::make_tuple(onerel::format_word(r.core), onerel::format_word(r.conjugator));
          },
          py::arg("word"), py::arg("rank") = 0);
    m.def("exponent_sums",
          [](const std::string& w, int rank) { return onerel::exponent_sums(parse(w, rank)); },
          py::arg("word"), py::arg("rank") = 0);

    m.def("magnus_table",
          [](const std::string& w, int rank, int pivot) {
              return json_to_py(onerel::to_json(
                  onerel::magnus_rewrite(parse(w, rank), onerel::Generator(pivot))));
          },
          py::arg("word"), py::arg("rank"), py::arg("pivot"));
    m.def("shift_automorphism",
          [](const std::string& w, int rank, int gen, std::int64_t m_amt, int pivot) {
              return onerel::format_word(onerel::shift_automorphism(
                  parse(w, rank), onerel::Generator(gen), m_amt, onerel::Generator(pivot)));
          },
          py::arg("word"), py::arg("rank"), py::arg("gen"), py::arg("m"), py::arg("pivot"));

    m.def("walk",
          [](const std::string& w, int rank) {
              return json_to_py(onerel::to_json(onerel::trace_walk(parse(w, rank))));
          },
          py::arg("word"), py::arg("rank") = 0);
    m.def("corners",
          [](const std::string& w, int rank, int letter) {
              onerel::Walk walk = onerel::trace_walk(parse(w, rank));
              auto rep = letter == 0 ? onerel::corners(walk)
                                     : onerel::corners(walk, onerel::Generator(letter));
              return json_to_py(onerel::to_json(rep));
          },
          py::arg("word"), py::arg("rank") = 0, py::arg("letter") = 0);
    m.def("is_bad",
          [](const std::string& w, int rank) {
              return onerel::is_bad(onerel::trace_walk(parse(w, rank)));
          },
          py::arg("word"), py::arg("rank") = 0);
    m.def("corner_count",
          [](const std::string& w, int rank) {
              return onerel::corner_count(onerel::trace_walk(parse(w, rank)));
          },
          py::arg("word"), py::arg("rank") = 0);
    m.def("touching_hyperplane",
          [](const std::string& w, int rank) -> py::object {
              auto cert = onerel::touching_hyperplane(onerel::trace_walk(parse(w, rank)));
              if (!cert) return py::none();
              return json_to_py(onerel::to_json(*cert));
          },
          py::arg("word"), py::arg("rank") = 0);
    m.def("insert_commutator",
          [](const std::string& w, int rank, std::size_t position) {
              return onerel::format_word(onerel::insert_commutator(parse(w, rank), position));
          },
          py::arg("word"), py::arg("rank"), py::arg("position"));

    m.def("brown_criterion",
          [](const std::string& w) {
              return json_to_py(onerel::to_json(onerel::brown_criterion(parse(w, 2))));
          },
          py::arg("word"));
    m.def("embeddable_criterion",
          [](const std::string& w, int rank) {
              return json_to_py(onerel::to_json(onerel::embeddable_criterion(parse(w, rank))));
          },
          py::arg("word"), py::arg("rank") = 0);

    m.def("max_piece_length",
          [](const std::vector<std::string>& words, int rank) {
              std::vector<onerel::Word> ws;
              for (const auto& w : words) ws.push_back(parse(w, rank));
              return onerel::max_piece_length(ws);
          },
          py::arg("words"), py::arg("rank") = 0);
    m.def("check_small_cancellation",
          [](const std::vector<std::string>& words, int rank, std::int64_t num, std::int64_t den) {
              std::vector<onerel::Word> ws;
              for (const auto& w : words) ws.push_back(parse(w, rank));
              return onerel::check_small_cancellation(ws, num, den);
          },
          py::arg("words"), py::arg("rank"), py::arg("lambda_num") = 1,
          py::arg("lambda_den") = 12);
    m.def("word_family",
          [](int k, int n) { return json_to_py(onerel::to_json(onerel::build_word_family(k, n))); },
          py::arg("k"), py::arg("n"));
    m.def("substitute",
          [](const std::string& relator, int rank, int n) {
              onerel::WordFamily f = onerel::build_word_family(rank, n);
              return onerel::format_word(onerel::substitute(parse(relator, rank), f));
          },
          py::arg("relator"), py::arg("rank"), py::arg("n"));
    m.def("z_extend",
          [](const std::string& relator, int rank, const std::vector<std::int64_t>& normal) {
              std::vector<onerel::BigInt> nv(normal.begin(), normal.end());
              return onerel::format_word(onerel::z_extend(parse(relator, rank), nv));
          },
          py::arg("relator"), py::arg("rank"), py::arg("normal"));
    m.def("embed_to_two_generators",
          [](const std::string& relator, int rank) {
              onerel::EmbeddingWitness wit =
                  onerel::embed_to_two_generators(parse(relator, rank));
              std::string why;
              json out = onerel::to_json(wit);
              out["verified"] = onerel::verify_witness(wit, &why);
              return json_to_py(out);
          },
          py::arg("relator"), py::arg("rank") = 0);
    m.def("hkiw_presentation",
          [](int k, int i, const std::string& w) {
              return json_to_py(onerel::to_json(onerel::hkiw_presentation(k, i, parse(w, k))));
          },
          py::arg("k"), py::arg("i"), py::arg("w"));

    m.def("count_words",
          [](const std::string& model, int n, int k) {
              return big_to_py(onerel::count_words(onerel::parse_model(model), n, k));
          },
          py::arg("model"), py::arg("n"), py::arg("k"));
    m.def("sample_words",
          [](const std::string& model_name, int n, int k, int count, std::uint64_t seed) {
              onerel::Model model = onerel::parse_model(model_name);
              onerel::warm_cr_tables(n, k);
              std::vector<std::string> out;
              for (int trial = 0; trial < count; ++trial) {
                  onerel::SeededRng rng(seed, static_cast<std::uint64_t>(trial));
                  out.push_back(onerel::format_word(onerel::sample_word(model, n, k, rng)));
              }
              return out;
          },
          py::arg("model"), py::arg("n"), py::arg("k"), py::arg("count") = 1, py::arg("seed") = 0);

    m.def("estimate_probability",
          [](const std::string& model, int k, int n, int trials, const std::string& event,
             std::uint64_t seed) {
              onerel::EstimateRow row = onerel::estimate_probability(
                  onerel::parse_model(model), k, n, trials, event, seed);
              py::dict d;
              d["model"] = row.model;
              d["k"] = row.k;
              d["n"] = row.n;
              d["trials"] = row.trials;
              d["event"] = row.event;
              d["successes"] = row.successes;
              d["estimate"] = row.estimate;
              d["ci_low"] = row.ci_low;
              d["ci_high"] = row.ci_high;
              d["seed"] = row.seed;
              return d;
          },
          py::arg("model"), py::arg("k"), py::arg("n"), py::arg("trials"), py::arg("event"),
          py::arg("seed") = 0);
    m.def("event_registry", [] { return onerel::event_registry_names(); });
    m.def("render_svg",
          [](const std::string& w) { return onerel::render_trace_svg(parse(w, 2)); },
          py::arg("word"));
}
