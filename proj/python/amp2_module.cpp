#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "amp2/cli.hpp"
#include "amp2/combinat.hpp"
#include "amp2/explicit.hpp"

namespace py = pybind11;
using namespace amp2;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the amp2 C++ core";

    m.def("word_to_perm", [](const std::vector<int>& letters, int n) {
        return word_to_perm(ReducedWord(letters, n)).images();
    }, py::arg("letters"), py::arg("n"));

    m.def("length", [](const std::vector<int>& p) { return length(Permutation(p)); });

    m.def("bruhat_leq", [](const std::vector<int>& u, const std::vector<int>& w) {
        return bruhat_leq(Permutation(u), Permutation(w));
    });

    m.def("wj_word", [](const std::vector<int>& a, int k, int n) { return wj_word(a, k, n).letters; },
          py::arg("a_list"), py::arg("k"), py::arg("n"));

    m.def("positive_subexpression", [](const std::vector<int>& w, const std::vector<int>& letters) {
        auto mask = positive_subexpression(Permutation(w), ReducedWord(letters, static_cast<int>(w.size())));
        return std::vector<bool>(mask.begin(), mask.end());
    }, py::arg("w"), py::arg("letters"));

    m.def("parse_dotted", [](const std::string& text, int n, int k) { return to_py(to_json(parse_dotted(text, n, k))); },
          py::arg("text"), py::arg("n"), py::arg("k"));

    m.def("render_dotted", [](const std::vector<int>& letters, const std::vector<bool>& mask, int n, int k) {
        return render_dotted(make_cell(n, k, ReducedWord(letters, n), SubexprMask(mask.begin(), mask.end())));
    }, py::arg("letters"), py::arg("mask"), py::arg("n"), py::arg("k"));

    m.def("positroid", [](const std::string& text, int n, int k) {
        return positroid_of(parse_dotted(text, n, k)).basis_lists();
    }, py::arg("text"), py::arg("n"), py::arg("k"));

    m.def("decperm", [](const std::vector<std::vector<int>>& bases, int n, int k) {
        return to_py(to_json(decperm_of(Positroid::from_lists(n, k, bases))));
    }, py::arg("bases"), py::arg("n"), py::arg("k"));

    m.def("le_diagram", [](const std::string& text, int n, int k) { return to_text(le_of(parse_dotted(text, n, k))); },
          py::arg("text"), py::arg("n"), py::arg("k"));

    m.def("generate_collection", [](int n, int k, const std::string& variant) {
        return to_py(to_json(generate_collection(n, k, parse_variant(variant))));
    }, py::arg("n"), py::arg("k"), py::arg("variant") = "twisted");

    m.def("enumerate_explicit", [](int n, int k) { return to_py(to_json(enumerate_explicit(n, k))); },
          py::arg("n"), py::arg("k"));

    m.def("verify_recursive_identity", [](int n, int k) { return to_py(to_json(verify_recursive_identity(n, k))); },
          py::arg("n"), py::arg("k"));

    m.def("cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"amp2"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
