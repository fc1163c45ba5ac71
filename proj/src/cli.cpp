#include "partopus/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "partopus/coherence.hpp"
#include "partopus/errors.hpp"
#include "partopus/hochschild.hpp"
#include "partopus/master_identity.hpp"
#include "partopus/models.hpp"
#include "partopus/phi.hpp"

namespace partopus {

namespace {

struct ArgError : std::runtime_error {
    ArgError(std::string arg, const ParseError& e) : std::runtime_error(e.what()), arg(std::move(arg)), pos(e.position()) {}
    std::string arg;
    std::size_t pos;
};

Partition parse_arg(const std::string& s) {
    try {
        return Partition::parse(s);
    } catch (const ParseError& e) {
        throw ArgError(s, e);
    }
}

std::vector<Partition> parse_list(const std::string& s) {
    std::vector<Partition> out;
    std::size_t offset = 0;
    for (const auto& piece : split_partition_list(s)) {
        try {
            out.push_back(Partition::parse(piece));
        } catch (const ParseError& e) {
            throw ArgError(s, ParseError(e.what(), offset + e.position()));
        }
        offset += piece.size() + 1;
    }
    return out;
}

std::string symbol_for(std::size_t k, std::size_t count) {
    if (count == 1) return "y";
    return "y" + std::to_string(k + 1);
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t flag) {
    if (opt->count() > 0) return flag;
    if (const char* env = std::getenv("PARTOPUS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("PARTOPUS_SEED is not an unsigned integer: ") + env);
        }
    }
    return 42;
}

}  // namespace

std::vector<std::string> split_partition_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    out.push_back(cur);
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"partitioned maps, their compositions and identities", "partopus"};
    app.require_subcommand(1, 1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "latex", "json"}));

    std::string pa, pb;
    auto* product = app.add_subcommand("product", "reduced product of two partitions");
    product->add_option("p", pa)->required();
    product->add_option("q", pb)->required();

    std::string shape, head;
    std::vector<std::string> groups;
    auto* nprod = app.add_subcommand("nprod", "higher product N(shape){head|groups...}");
    nprod->add_option("shape", shape)->required();
    nprod->add_option("head", head)->required();
    nprod->add_option("groups", groups, "comma-separated partitions per group")->required();

    std::string outer, target;
    std::vector<std::string> inners;
    bool count_only = false;
    auto* compose = app.add_subcommand("compose", "expand {x}{y...} on formal generators");
    compose->add_option("outer", outer)->required();
    compose->add_option("inner", inners)->required();
    compose->add_option("--target", target, "a single component");
    compose->add_flag("--count", count_only, "term and subdivision counts only");

    std::string id_target, filter = "none";
    bool kvz = false;
    auto* identity = app.add_subcommand("identity", "the target component of the master identity");
    identity->add_option("target", id_target)->required();
    identity->add_flag("--kvz", kvz, "drop the Type II coefficients");
    identity->add_option("--filter", filter)->check(CLI::IsMember({"none", "a-infinity", "ones"}));

    std::string suite, model = "dual-numbers";
    std::uint64_t seed = 42;
    int arity_cap = 3, dim_cap = 4, samples = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"hochschild", "phi", "coherence", "pre-lie"}));
    verify->add_option("--model", model, "builtin name or JSON file");
    auto* seed_opt = verify->add_option("--seed", seed);
    verify->add_option("--arity-cap", arity_cap)->check(CLI::Range(1, 4));
    verify->add_option("--dim-cap", dim_cap)->check(CLI::Range(1, 8));
    verify->add_option("--samples", samples, "samples per check (suite default when 0)");

    auto* models = app.add_subcommand("models", "list the builtin models");

    for (auto* sc : {product, nprod, compose, identity, verify, models}) sc->fallthrough();

    std::vector<std::string> argv_s{"partopus"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_s) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    const bool json = format == "json", latex = format == "latex";
    try {
        if (*product) {
            Partition p = parse_arg(pa), q = parse_arg(pb);
            PartitionVector v = star(p, q);
            if (json)
                out << nlohmann::json{{"p", to_json(p)}, {"q", to_json(q)}, {"product", v.to_json()}}.dump(2) << "\n";
            else if (latex) {
                std::string s = v.str();
                std::string t;
                for (char c : s) t += c == '|' ? std::string("\\mid ") : std::string(1, c);
                out << t << "\n";
            } else
                out << v.str() << "\n";
            return kExitOk;
        }
        if (*nprod) {
            Partition sh = parse_arg(shape), hd = parse_arg(head);
            std::vector<std::vector<Partition>> gs;
            for (const auto& g : groups) gs.push_back(parse_list(g));
            PartitionVector v = higher_product(sh, hd, gs);
            if (json)
                out << v.to_json().dump(2) << "\n";
            else
                out << v.str() << "\n";
            return kExitOk;
        }
        if (*compose) {
            Partition xo = parse_arg(outer);
            std::vector<PMap> ys;
            std::vector<Partition> types;
            for (std::size_t k = 0; k < inners.size(); ++k) {
                types.push_back(parse_arg(inners[k]));
                ys.push_back(symbol_map(symbol_for(k, inners.size()), types.back()));
            }
            PMap x = symbol_map("x", xo);
            std::vector<Partition> targets;
            if (!target.empty())
                targets.push_back(parse_arg(target));
            else
                targets = composition_targets(xo, types).support();
            nlohmann::json j = nlohmann::json::array();
            for (const auto& t : targets) {
                FormalSum s = compose_component(x, ys, t);
                std::size_t subs = enumerate_subdivisions(t, xo, types).size();
                if (json) {
                    nlohmann::json c = {{"target", to_json(t)}, {"subdivisions", subs}, {"terms", s.size()}};
                    if (!count_only) c["sum"] = s.to_json();
                    j.push_back(c);
                } else if (latex) {
                    out << t.str() << ": " << s.latex() << "\n";
                } else {
                    out << t.str() << ": " << s.size() << " terms, " << subs << " subdivisions\n";
                    if (!count_only) out << "  " << s.str() << "\n";
                }
            }
            if (json) out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*identity) {
            IdentityOptions opt;
            opt.type_ii_coefficients = !kvz;
            opt.filter = filter == "a-infinity" ? SymbolFilter::a_infinity
                         : filter == "ones"     ? SymbolFilter::ones
                                                : SymbolFilter::none;
            IdentityReport r = master_identity(parse_arg(id_target), opt);
            if (json)
                out << r.to_json().dump(2) << "\n";
            else if (latex)
                out << r.latex();
            else
                out << r.str();
            return kExitOk;
        }
        if (*verify) {
            const std::uint64_t s = resolve_seed(seed_opt, seed);
            SuiteReport rep;
            if (suite == "pre-lie") {
                rep = SuiteReport{"pre-lie", "partitions", s, {}};
                std::vector<Partition> fam;
                for (const auto& p : regular_partitions_up_to(4)) fam.push_back(p);
                CheckResult c{"right pre-Lie on regular partitions, total degree <= 4", true, 0, "", nullptr};
                for (const auto& a : fam)
                    for (const auto& b : fam)
                        for (const auto& d : fam) {
                            if (a.d() + b.d() + d.d() > 4) continue;
                            ++c.samples;
                            if (c.pass && pre_lie_defect(a, b, d) != pre_lie_defect(a, d, b)) {
                                c.pass = false;
                                c.witness = {{"triple", {a.str(), b.str(), d.str()}}};
                            }
                        }
                CheckResult z{"zero slots break it: ((2),(0),(1))", false, 1, "", nullptr};
                Partition i2{2}, zero{0}, j1{1};
                if (pre_lie_defect(i2, zero, j1) != pre_lie_defect(i2, j1, zero)) {
                    z.pass = true;
                    z.witness = {{"defect((2),(0),(1))", pre_lie_defect(i2, zero, j1).str()},
                                 {"defect((2),(1),(0))", pre_lie_defect(i2, j1, zero).str()}};
                }
                rep.checks = {c, z};
            } else if (suite == "coherence") {
                rep = coherence_suite({Partition{1}, Partition{2}, Partition{3}, Partition{1, 1}, Partition{1, 2}, Partition{2, 1}}, s,
                                      samples > 0 ? samples : 10);
            } else {
                ModelAlgebra m = load_model(model);
                if (static_cast<int>(m.basis.dim()) > dim_cap)
                    throw std::invalid_argument("model " + m.name + " has dimension " + std::to_string(m.basis.dim()) +
                                                " > --dim-cap " + std::to_string(dim_cap));
                if (suite == "hochschild")
                    rep = hochschild_suite(m, s, arity_cap, samples > 0 ? samples : 20);
                else
                    rep = phi_suite(m, s, samples > 0 ? samples : 5);
            }
            if (json)
                out << rep.to_json().dump(2) << "\n";
            else
                out << rep.str();
            return rep.pass() ? kExitOk : kExitVerifyFailed;
        }
        if (*models) {
            if (json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& n : builtin_models()) j.push_back(builtin_model(n).to_json());
                out << j.dump(2) << "\n";
            } else {
                for (const auto& n : builtin_models()) {
                    ModelAlgebra m = builtin_model(n);
                    out << n << "  dim " << m.basis.dim() << "  maps:";
                    for (const auto& [k, v] : m.maps) out << " " << k;
                    out << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const ArgError& e) {
        err << "parse error: " << e.what() << "\n  " << e.arg << "\n  " << std::string(e.pos, ' ') << "^\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitParse;
}

}  // namespace partopus
