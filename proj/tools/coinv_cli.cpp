// coinv: invariants of torsion-free lattices acting on triangle buildings
// from their combinatorial presentations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinv/chambers.hpp"
#include "coinv/coxeter.hpp"
#include "coinv/orderbounds.hpp"
#include "coinv/presentation.hpp"
#include "coinv/quotient_complex.hpp"
#include "coinv/report.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;

coinv::chambers::Word parse_word(const std::string& text) {
    coinv::chambers::Word w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "s" || tok == "0")
            w.push_back(0);
        else if (tok == "a" || tok == "1")
            w.push_back(1);
        else if (tok == "b" || tok == "2")
            w.push_back(2);
        else
            throw std::invalid_argument("bad gallery letter '" + tok +
                                        "' (use s,a,b or 0,1,2)");
    }
    return w;
}

std::vector<coinv::chambers::Word> parse_words(const std::vector<std::string>& specs) {
    std::vector<coinv::chambers::Word> out;
    for (const auto& s : specs) out.push_back(parse_word(s));
    return out;
}

coinv::coxeter::DiagramKind parse_diagram(const std::string& name) {
    using coinv::coxeter::DiagramKind;
    if (name == "A2") return DiagramKind::A2affine;
    if (name == "B2") return DiagramKind::B2affine;
    if (name == "G2") return DiagramKind::G2affine;
    throw std::invalid_argument("unknown diagram '" + name + "' (A2, B2 or G2)");
}

void emit(const coinv::report::InvariantReport& r, const std::string& format) {
    if (format == "json")
        std::cout << coinv::report::to_json(r).dump(2) << "\n";
    else
        std::cout << coinv::report::to_text(r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of triangle-presented lattices"};
    app.require_subcommand(1);
    app.fallthrough(); // let --format appear after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string path;
    std::vector<std::string> gallery_specs;
    std::string expected_path;
    std::string diagram_name = "A2";
    std::vector<long> q_values;
    long n_s = 1;
    bool equal_hyperspecial = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report");
    analyze->add_option("file", path, "presentation file")->required();
    analyze->add_option("--galleries", gallery_specs,
                        "gallery words, comma-separated type labels");

    CLI::App* homology = app.add_subcommand("homology", "quotient-complex homology");
    homology->add_option("file", path, "presentation file")->required();

    CLI::App* coinvariants =
        app.add_subcommand("coinvariants", "presented coinvariant model");
    coinvariants->add_option("file", path, "presentation file")->required();
    coinvariants->add_option("--galleries", gallery_specs,
                             "gallery words, comma-separated type labels");

    CLI::App* bounds = app.add_subcommand("bounds", "order certificate for a diagram");
    bounds->add_option("--diagram", diagram_name, "A2, B2 or G2");
    bounds->add_option("--q", q_values, "thickness parameters (1 or 3 values)")
        ->required();
    bounds->add_option("--ns", n_s, "special vertex-orbit count");
    bounds->add_flag("--equal-hyperspecial", equal_hyperspecial,
                     "assert equal special vertex-orbit counts (split case)");

    CLI::App* verify = app.add_subcommand("verify", "compare against expectations");
    verify->add_option("file", path, "presentation file")->required();
    verify->add_option("--expected", expected_path, "expectation JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            auto p = coinv::tri::load_presentation_file(path);
            emit(coinv::report::analyze(p, parse_words(gallery_specs)), format);
        } else if (homology->parsed()) {
            auto p = coinv::tri::load_presentation_file(path);
            auto c = coinv::cx::build_complex(p);
            auto h = coinv::cx::homology(c);
            auto [k0, k1] = coinv::cx::reduced_k_groups(h);
            if (format == "json") {
                nlohmann::json j{{"euler", h.euler},
                                 {"h0", h.h0.to_string()},
                                 {"h1", h.h1.to_string()},
                                 {"h2", h.h2.to_string()},
                                 {"k0", k0.to_string()},
                                 {"k1", k1.to_string()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "euler characteristic: " << h.euler << "\n"
                          << "H0 = " << h.h0.to_string() << "\n"
                          << "H1 = " << h.h1.to_string() << "\n"
                          << "H2 = " << h.h2.to_string() << "\n"
                          << "K0 = " << k0.to_string() << ", K1 = " << k1.to_string()
                          << "\n";
            }
        } else if (coinvariants->parsed()) {
            auto p = coinv::tri::load_presentation_file(path);
            auto model = coinv::chambers::coinvariant_model(p, parse_words(gallery_specs));
            if (format == "json") {
                nlohmann::json j{{"group", model.group.to_string()}};
                if (model.ord_one)
                    j["ord_one"] = model.ord_one->get_str();
                else
                    j["ord_one"] = "infinite";
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "coinvariant model = " << model.group.to_string()
                          << "\nord([1]) in model = ";
                if (model.ord_one)
                    std::cout << *model.ord_one << "\n";
                else
                    std::cout << "infinite\n";
            }
        } else if (bounds->parsed()) {
            if (q_values.size() != 1 && q_values.size() != 3)
                throw std::invalid_argument("--q takes 1 or 3 values");
            auto kind = parse_diagram(diagram_name);
            auto d = q_values.size() == 1
                         ? coinv::coxeter::CoxeterDiagram::split(kind, q_values[0])
                         : coinv::coxeter::CoxeterDiagram::make(kind, q_values[0],
                                                                q_values[1], q_values[2]);
            auto cert = coinv::bounds::bounds_report(d, n_s, equal_hyperspecial);
            if (format == "json") {
                nlohmann::json ann = nlohmann::json::array();
                for (const auto& a : cert.annihilators) ann.push_back(a.get_str());
                nlohmann::json j{{"annihilators", ann},
                                 {"gcd_annihilator", cert.gcd_annihilator.get_str()},
                                 {"bound_thm2", cert.bound_thm2.get_str()},
                                 {"exceptional", cert.exceptional}};
                j["bound_thm3"] =
                    cert.bound_thm3 ? nlohmann::json(cert.bound_thm3->get_str())
                                    : nlohmann::json(nullptr);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "annihilators of [1]:";
                for (const auto& a : cert.annihilators) std::cout << " " << a;
                std::cout << "\nrefined gcd annihilator = " << cert.gcd_annihilator
                          << "\nbound (q_s * covol) = " << cert.bound_thm2 << "\n";
                if (cert.bound_thm3)
                    std::cout << "bound (covol - n_s) = " << *cert.bound_thm3 << "\n";
                else
                    std::cout << "covol bound: not applicable (exceptional diagram)\n";
            }
        } else if (verify->parsed()) {
            auto p = coinv::tri::load_presentation_file(path);
            auto r = coinv::report::analyze(p);
            std::ifstream in(expected_path);
            if (!in)
                throw std::invalid_argument("cannot open expectation file: " +
                                            expected_path);
            nlohmann::json expected = nlohmann::json::parse(in);
            auto result = coinv::report::verify(r, expected);
            if (result.ok()) {
                std::cout << "verify: all fields match\n";
            } else {
                for (const auto& f : result.failures)
                    std::cout << "verify: " << f << "\n";
                return kExitVerifyFailure;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
