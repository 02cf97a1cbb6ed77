#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ivif/aggregation.hpp"
#include "ivif/comparators.hpp"
#include "ivif/edas.hpp"
#include "ivif/error.hpp"
#include "ivif/ivifn.hpp"
#include "ivif/pipeline.hpp"
#include "ivif/problem.hpp"
#include "ivif/report.hpp"
#include "ivif/weighting.hpp"

namespace py = pybind11;

namespace {

ivif::GroupMatrix to_matrix(const std::vector<std::vector<ivif::Ivifn>>& rows) {
    return {ivif::Grid<ivif::Ivifn>::from_rows(rows), true};
}

ivif::CptParams make_cpt(double alpha, double beta, double gamma, double delta, double rho) {
    ivif::CptParams p{alpha, beta, gamma, delta, rho};
    p.validate();
    return p;
}

ivif::Problem load_any(const std::string& path_or_text) {
    const auto first = path_or_text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && path_or_text[first] == '{') return ivif::parse_problem_text(path_or_text);
    return ivif::load_problem(path_or_text);
}

void BindIvifn(py::module& m) {
    py::class_<ivif::Ivifn>(m, "Ivifn")
        .def(py::init<double, double, double, double>(), py::arg("lm"), py::arg("rm"), py::arg("ln"), py::arg("rn"))
        .def_property_readonly("lm", &ivif::Ivifn::lm)
        .def_property_readonly("rm", &ivif::Ivifn::rm)
        .def_property_readonly("ln", &ivif::Ivifn::ln)
        .def_property_readonly("rn", &ivif::Ivifn::rn)
        .def("bounds", &ivif::Ivifn::bounds)
        .def_static("max", &ivif::Ivifn::max)
        .def_static("min", &ivif::Ivifn::min)
        .def("__eq__", [](const ivif::Ivifn& a, const ivif::Ivifn& b) { return a == b; })
        .def("__repr__", [](const ivif::Ivifn& x) { return "Ivifn" + x.to_string(); });

    m.def("complement", &ivif::complement);
    m.def("add", &ivif::add);
    m.def("mul", &ivif::mul);
    m.def("join", &ivif::join);
    m.def("meet", &ivif::meet);
    m.def("scale", &ivif::scale, py::arg("k"), py::arg("x"));
    m.def("power", &ivif::power, py::arg("x"), py::arg("k"));
    m.def("hesitancy", [](const ivif::Ivifn& x) {
        auto h = ivif::hesitancy(x);
        return std::pair{h.lo, h.hi};
    });
    m.def("score_wc", &ivif::score_wc);
    m.def("accuracy_wc", &ivif::accuracy_wc);
    m.def("score_simple", &ivif::score_simple);
    m.def("accuracy_simple", &ivif::accuracy_simple);
    m.def("compare", [](const ivif::Ivifn& a, const ivif::Ivifn& b) { return ivif::to_string(ivif::compare(a, b)); });
    m.def("dist_hamming", &ivif::dist_hamming);
    m.def("dist_hausdorff", &ivif::dist_hausdorff);
    m.def("dist_hybrid", &ivif::dist_hybrid);
}

void BindMethods(py::module& m) {
    m.def("ivifwa", [](const std::vector<ivif::Ivifn>& v, const std::vector<double>& w) {
        return ivif::ivifwa(v, ivif::WeightVector(w));
    });
    m.def("ivifwg", [](const std::vector<ivif::Ivifn>& v, const std::vector<double>& w) {
        return ivif::ivifwg(v, ivif::WeightVector(w));
    });
    m.def(
        "cpt_weight",
        [](double p, const std::string& branch, double alpha, double beta) {
            ivif::CptParams params;
            params.alpha = alpha;
            params.beta = beta;
            params.validate();
            if (branch != "gain" && branch != "loss") {
                throw ivif::DomainError("branch must be 'gain' or 'loss', got '" + branch + "'");
            }
            return ivif::cpt_weight(p, branch == "loss" ? ivif::Branch::Loss : ivif::Branch::Gain, params);
        },
        py::arg("p"), py::arg("branch") = "gain", py::arg("alpha") = 0.61, py::arg("beta") = 0.69);
    m.def("entropy_weights", [](const std::vector<std::vector<ivif::Ivifn>>& rows) {
        return ivif::entropy_weights(to_matrix(rows)).weights.values();
    });
    m.def(
        "edas",
        [](const std::vector<std::vector<ivif::Ivifn>>& rows, const std::vector<double>& weights, double alpha,
           double beta, double gamma, double delta, double rho) {
            auto t = ivif::score_and_rank(to_matrix(rows), ivif::WeightVector(weights),
                                          make_cpt(alpha, beta, gamma, delta, rho));
            py::dict d;
            d["nsp"] = t.nsp;
            d["nsn"] = t.nsn;
            d["scores"] = t.scores;
            d["ranking"] = t.ranking;
            return d;
        },
        py::arg("matrix"), py::arg("weights"), py::arg("alpha") = 0.61, py::arg("beta") = 0.69,
        py::arg("gamma") = 0.88, py::arg("delta") = 0.88, py::arg("rho") = 2.25);
}

void BindPipeline(py::module& m) {
    m.def(
        "run_json",
        [](const std::string& problem, const std::string& method, bool intermediates) {
            const auto p = load_any(problem);
            ivif::PipelineOptions options;
            if (!method.empty()) options.method = ivif::method_from_string(method);
            const auto result = ivif::run_pipeline(p, options);
            return ivif::report_to_json(ivif::build_report(p, result, options, intermediates));
        },
        py::arg("problem"), py::arg("method") = "", py::arg("emit_intermediates") = false);
    m.def(
        "sweep_json",
        [](const std::string& problem, const std::string& param, const std::vector<double>& values) {
            return ivif::sweep_to_json(ivif::sweep(load_any(problem), param, values));
        },
        py::arg("problem"), py::arg("param"), py::arg("values"));
    m.def("validate", [](const std::string& problem) {
        const auto p = load_any(problem);
        return std::tuple{p.alternatives.size(), p.attributes.size(), p.experts.size()};
    });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interval-valued intuitionistic fuzzy CPT-EDAS engine";
    static py::exception<ivif::Error> error(m, "IvifError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ivif::Error& e) {
            py::set_error(error, (std::string(e.kind()) + ": " + e.what()).c_str());
        }
    });
    BindIvifn(m);
    BindMethods(m);
    BindPipeline(m);
}
