#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twolayer/counting.hpp"
#include "twolayer/generator.hpp"
#include "twolayer/oracle.hpp"
#include "twolayer/saturation.hpp"

namespace py = pybind11;
using namespace twolayer;

namespace {

py::object to_py_int(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

std::vector<std::pair<int, int>> layer_pairs(const Layer& layer) {
    std::vector<std::pair<int, int>> out;
    for (const Comparator& c : layer) out.emplace_back(c.lo, c.hi);
    return out;
}

Layer layer_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    Layer layer;
    for (auto [lo, hi] : pairs) layer.push_back({lo, hi});
    return sorted_layer(layer);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-layer comparator-network prefixes modulo symmetry";

    py::register_exception<resource_limit_error>(m, "ResourceLimitError",
                                                 PyExc_RuntimeError);

    py::class_<Network>(m, "Network")
        .def(py::init([](int n, const std::vector<std::vector<std::pair<int, int>>>& layers) {
                 Network net;
                 net.n = n;
                 for (const auto& pairs : layers) net.layers.push_back(layer_from_pairs(pairs));
                 validate_network(net);
                 return net;
             }),
             py::arg("n"), py::arg("layers"))
        .def_readonly("n", &Network::n)
        .def_property_readonly("layers",
                               [](const Network& net) {
                                   std::vector<std::vector<std::pair<int, int>>> out;
                                   for (const Layer& l : net.layers)
                                       out.push_back(layer_pairs(l));
                                   return out;
                               })
        .def("standard", &Network::standard)
        .def("size", &Network::size)
        .def("depth", &Network::depth)
        .def("__eq__", [](const Network& a, const Network& b) { return a == b; })
        .def("__repr__", &write_network);

    m.def("read_network", &read_network_string, py::arg("text"));
    m.def("write_network", &write_network, py::arg("net"));
    m.def("first_layer_parberry",
          [](int n) { return layer_pairs(first_layer_parberry(n)); }, py::arg("n"));
    m.def("first_layer_reflective",
          [](int n) { return layer_pairs(first_layer_reflective(n)); }, py::arg("n"));
    m.def(
        "apply",
        [](const Network& net, const std::string& bits) { return apply(net, bits); },
        py::arg("net"), py::arg("input"));
    m.def(
        "outputs",
        [](const Network& net) {
            std::vector<std::string> out;
            for (std::uint64_t v : outputs(net).values) out.push_back(format_bits(v, net.n));
            return out;
        },
        py::arg("net"));
    m.def("is_sorting_network", &is_sorting_network, py::arg("net"));
    m.def(
        "permute",
        [](const Network& net, const std::vector<int>& pi) {
            Permutation p(static_cast<std::size_t>(net.n) + 1, 0);
            if (static_cast<int>(pi.size()) != net.n)
                throw std::invalid_argument("permutation needs one image per channel");
            for (int i = 1; i <= net.n; ++i) p[i] = pi[static_cast<std::size_t>(i) - 1];
            return permute(net, p);
        },
        py::arg("net"), py::arg("pi"), "pi lists the image of channels 1..n");
    m.def("untangle", &untangle, py::arg("net"));
    m.def("reflect", py::overload_cast<const Network&>(&reflect), py::arg("net"));
    m.def("is_redundant", &is_redundant, py::arg("net"));

    m.def(
        "sentence_of",
        [](const Network& net) { return sentence_to_string(sentence_of(net)); },
        py::arg("net"));
    m.def(
        "net_of_sentence",
        [](const std::string& s, int n) { return net_of_sentence(parse_sentence(s), n); },
        py::arg("sentence"), py::arg("n"));
    m.def("is_canonical", &is_canonical, py::arg("word"));
    m.def("reflect_word", &reflect_word, py::arg("word"));
    m.def(
        "reflect_sentence",
        [](const std::string& s) {
            return sentence_to_string(reflect_sentence(parse_sentence(s)));
        },
        py::arg("sentence"));

    m.def("is_saturated", &is_saturated_semantic, py::arg("net"));
    m.def("is_saturated_syntactic", &is_saturated_syntactic, py::arg("net"));
    m.def(
        "word_saturation_check",
        [](const std::string& s) { return word_saturation_check(parse_sentence(s)); },
        py::arg("sentence"));

    m.def(
        "enumerate_canonical_words",
        [](int budget, const std::string& kind) {
            WordKind k;
            if (kind == "head")
                k = WordKind::Head;
            else if (kind == "stick")
                k = WordKind::Stick;
            else if (kind == "cycle")
                k = WordKind::Cycle;
            else
                throw std::invalid_argument("kind must be head, stick or cycle");
            return enumerate_canonical_words(budget, k);
        },
        py::arg("channel_budget"), py::arg("kind"));
    m.def(
        "generate_classes",
        [](int n, const std::string& set, int jobs) {
            return generate_classes(n, parse_variant(set), jobs);
        },
        py::arg("n"), py::arg("set") = "R", py::arg("jobs") = 1);
    m.def(
        "count_classes",
        [](int n, const std::string& set, int jobs) {
            return count_classes(n, parse_variant(set), jobs);
        },
        py::arg("n"), py::arg("set") = "R", py::arg("jobs") = 1);
    m.def(
        "orbit_size",
        [](const std::string& s, int n) { return to_py_int(orbit_size(parse_sentence(s), n)); },
        py::arg("sentence"), py::arg("n"));
    m.def(
        "labeled_count",
        [](int n, const std::string& set) {
            if (set == "G") return to_py_int(sum_orbit_sizes(n, GrammarVariant::Full));
            if (set == "S") return to_py_int(sum_orbit_sizes(n, GrammarVariant::Saturated));
            throw std::invalid_argument("labeled counts exist for G and S");
        },
        py::arg("n"), py::arg("set"));
    m.def("g_count", [](int n) { return to_py_int(g_count(n)); }, py::arg("n"));

    m.def(
        "brute_force_table",
        [](int n, int jobs) {
            BruteRow row = brute_force_table(n, jobs);
            py::dict d;
            d["n"] = row.n;
            d["G"] = row.G;
            d["S"] = row.S;
            d["RG"] = row.RG;
            d["RS"] = row.RS;
            d["R"] = row.R;
            return d;
        },
        py::arg("n"), py::arg("jobs") = 1);
    m.def(
        "check_conjecture",
        [](int n) {
            ConjectureResult res = check_conjecture(n);
            return py::make_tuple(res.holds, res.counterexamples);
        },
        py::arg("n"));
    m.def(
        "equivalent",
        [](const Network& a, const Network& b) { return equivalent_brute(a, b); },
        py::arg("a"), py::arg("b"));
}
