#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "partopus/cli.hpp"
#include "partopus/coherence.hpp"
#include "partopus/errors.hpp"
#include "partopus/hochschild.hpp"
#include "partopus/master_identity.hpp"
#include "partopus/phi.hpp"

namespace py = pybind11;
using namespace partopus;

namespace {

std::vector<Partition> parse_all(const std::vector<std::string>& xs) {
    std::vector<Partition> out;
    for (const auto& x : xs) out.push_back(Partition::parse(x));
    return out;
}

// JSON crosses the boundary as text; the package turns it into dicts
std::string compose_json(const std::string& outer, const std::vector<std::string>& inners, const std::string& target) {
    Partition xo = Partition::parse(outer);
    auto types = parse_all(inners);
    std::vector<PMap> ys;
    for (std::size_t k = 0; k < types.size(); ++k)
        ys.push_back(symbol_map(types.size() == 1 ? "y" : "y" + std::to_string(k + 1), types[k]));
    PMap x = symbol_map("x", xo);
    std::vector<Partition> targets;
    if (target.empty())
        targets = composition_targets(xo, types).support();
    else
        targets.push_back(Partition::parse(target));
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : targets) {
        FormalSum s = compose_component(x, ys, t);
        j.push_back({{"target", to_json(t)},
                     {"subdivisions", enumerate_subdivisions(t, xo, types).size()},
                     {"terms", s.size()},
                     {"text", s.str()},
                     {"sum", s.to_json()}});
    }
    return j.dump();
}

std::string identity_json(const std::string& target, bool kvz, const std::string& filter) {
    IdentityOptions opt;
    opt.type_ii_coefficients = !kvz;
    if (filter == "a-infinity")
        opt.filter = SymbolFilter::a_infinity;
    else if (filter == "ones")
        opt.filter = SymbolFilter::ones;
    else if (filter != "none")
        throw std::invalid_argument("unknown filter " + filter);
    return master_identity(Partition::parse(target), opt).to_json().dump();
}

std::string verify_json(const std::string& suite, const std::string& model, std::uint64_t seed, int samples) {
    SuiteReport r;
    if (suite == "hochschild")
        r = hochschild_suite(load_model(model), seed, 3, samples > 0 ? samples : 20);
    else if (suite == "phi")
        r = phi_suite(load_model(model), seed, samples > 0 ? samples : 5);
    else if (suite == "coherence")
        r = coherence_suite({Partition{1}, Partition{2}, Partition{3}, Partition{1, 1}, Partition{1, 2}}, seed, samples > 0 ? samples : 10);
    else
        throw std::invalid_argument("unknown suite " + suite);
    return r.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_partopus, m) {
    m.doc() = "partitioned multilinear maps";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("star", [](const std::string& p, const std::string& q) { return star(Partition::parse(p), Partition::parse(q)).str(); },
          "reduced product of two partitions, as text");
    m.def("star_raw", [](const std::string& p, const std::string& q) { return star_raw(Partition::parse(p), Partition::parse(q)).str(); });
    m.def("higher_product",
          [](const std::string& shape, const std::string& head, const std::vector<std::vector<std::string>>& groups) {
              std::vector<std::vector<Partition>> gs;
              for (const auto& g : groups) gs.push_back(parse_all(g));
              return higher_product(Partition::parse(shape), Partition::parse(head), gs).str();
          });
    m.def("pre_lie_defect", [](const std::string& a, const std::string& b, const std::string& c) {
        return pre_lie_defect(Partition::parse(a), Partition::parse(b), Partition::parse(c)).str();
    });
    m.def("compose_json", &compose_json, py::arg("outer"), py::arg("inners"), py::arg("target") = "");
    m.def("identity_json", &identity_json, py::arg("target"), py::arg("kvz") = false, py::arg("filter") = "none");
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("model") = "dual-numbers", py::arg("seed") = 42,
          py::arg("samples") = 0);
    m.def("models", &builtin_models);
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
