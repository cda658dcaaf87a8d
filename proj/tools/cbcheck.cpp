// cbcheck: decide Cayley-Bacharach / Gorenstein properties of a
// zero-dimensional affine algebra presented by ideal generators.
#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbcheck/cbp.hpp"
#include "cbcheck/problem.hpp"
#include "cbcheck/separator.hpp"

using json = nlohmann::ordered_json;
using namespace cbcheck;

namespace {

json field_elems_json(const std::vector<FieldElement>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(e.to_string());
    return a;
}

json hf_json(const std::vector<int>& hf) {
    json a = json::array();
    for (int h : hf) a.push_back(h);
    return a;
}

std::string join_elems(const std::vector<FieldElement>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

struct Options {
    std::string file;
    bool as_json = false;
    std::string det_mode;  // "", "symbolic", "evaluated"
    std::uint64_t seed = 1;
    unsigned max_extension = 16;

    CheckOptions check() const {
        CheckOptions c;
        if (det_mode == "symbolic") c.mode = DetMode::Symbolic;
        if (det_mode == "evaluated") c.mode = DetMode::Evaluated;
        c.seed = seed;
        c.max_extension = max_extension;
        return c;
    }
};

json quotient_summary(const QuotientAlgebra& A) {
    json j;
    j["dim"] = A.dim();
    j["hf"] = hf_json(A.hilbert());
    j["ri"] = A.regularity_index();
    j["delta"] = A.last_difference();
    json basis = json::array();
    for (size_t i = 0; i < A.dim(); ++i) basis.push_back(A.basis_poly(i).to_string());
    j["basis"] = basis;
    json orders = json::array();
    for (int o : A.orders()) orders.push_back(o);
    j["orders"] = orders;
    return j;
}

json sepdeg_json(const IdealHandle& I, const DecompositionInput& D, const QuotientAlgebra& A) {
    json comps = json::array();
    bool all = true;
    for (size_t i = 0; i < D.size(); ++i) {
        json c;
        SocleSpace S = socle_space(I, D, i, A);
        c["index"] = i + 1;
        c["ell"] = D.residue_degree(i);
        c["socle_dim"] = S.m;
        c["k"] = S.k;
        bool maxd = check_max_sepdeg(I, D, i, A);
        c["max_sepdeg"] = maxd;
        all = all && maxd;
        if (S.k == 1) c["sepdeg"] = sepdeg_gorenstein_case(I, D, i, A);
        comps.push_back(std::move(c));
    }
    json j;
    j["components"] = std::move(comps);
    j["cbp_via_separators"] = all;
    return j;
}

void emit(const json& j, const Options& opt, const std::string& human) {
    if (opt.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

int run_command(const std::string& cmd, const Options& opt) {
    Problem prob = parse_problem_file(opt.file);
    const IdealHandle& I = *prob.ideal;
    const auto t0 = std::chrono::steady_clock::now();

    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (cmd == "gb") {
        const GroebnerBasis& gb = I.groebner_basis(TermOrdering::degrevlex());
        json j;
        j["command"] = "gb";
        j["order"] = "DegRevLex";
        json gens = json::array();
        std::string human;
        for (const auto& g : gb.gens()) {
            gens.push_back(g.to_string());
            human += g.to_string() + "\n";
        }
        j["gb"] = std::move(gens);
        j["gb_size"] = gb.gens().size();
        emit(j, opt, human);
        return 0;
    }

    QuotientAlgebra A = QuotientAlgebra::build(I);

    if (cmd == "hilbert") {
        json j = quotient_summary(A);
        j["command"] = "hilbert";
        std::string human;
        for (size_t i = 0; i < A.hilbert().size(); ++i)
            human += (i ? " " : "") + std::to_string(A.hilbert()[i]);
        human += "; ri = " + std::to_string(A.regularity_index()) + "\n";
        emit(j, opt, human);
        return 0;
    }

    if (cmd == "cbp") {
        CbpResult r = check_cbp(A);
        json j;
        j["command"] = "cbp";
        j["cbp"] = r.value;
        std::string human = std::string("cbp: ") + (r.value ? "true" : "false") + "\n";
        if (r.witness) {
            j["failure_witness"] = field_elems_json(*r.witness);
            human += "annihilating element coordinates: " + join_elems(*r.witness) + "\n";
        }
        emit(j, opt, human);
        return 0;
    }

    if (cmd == "gorenstein" || cmd == "gor-cbp") {
        GorResult r = cmd == "gorenstein" ? check_locally_gorenstein(A, opt.check())
                                          : check_gor_cbp(A, opt.check());
        const char* name = cmd == "gorenstein" ? "locally_gorenstein" : "gor_and_cbp";
        json j;
        j["command"] = cmd;
        j[name] = r.value;
        std::string human = std::string(name) + ": " + (r.value ? "true" : "false") + "\n";
        if (r.det_poly) {
            j["det"] = r.det_poly->to_string();
            human += "det = " + r.det_poly->to_string() + "\n";
        }
        if (r.witness_point) {
            j["witness_point"] = field_elems_json(*r.witness_point);
            human += "witness point: " + join_elems(*r.witness_point) + "\n";
        }
        if (r.field_used) j["field_used"] = r.field_used->to_string();
        emit(j, opt, human);
        return 0;
    }

    if (cmd == "strict-cbp") {
        CbpResult r = check_strict_cbp(I);
        json j;
        j["command"] = cmd;
        j["strict_cbp"] = r.value;
        emit(j, opt, std::string("strict_cbp: ") + (r.value ? "true" : "false") + "\n");
        return 0;
    }

    if (cmd == "strict-gorenstein") {
        bool r = check_strict_gorenstein(I);
        json j;
        j["command"] = cmd;
        j["strict_gorenstein"] = r;
        emit(j, opt, std::string("strict_gorenstein: ") + (r ? "true" : "false") + "\n");
        return 0;
    }

    if (cmd == "sepdeg") {
        if (prob.components.empty())
            throw ProblemError("'sepdeg' needs at least one component block");
        DecompositionInput D = DecompositionInput::validate(I, prob.components);
        json j = sepdeg_json(I, D, A);
        j["command"] = "sepdeg";
        std::string human;
        for (const auto& c : j["components"]) {
            human += "component " + std::to_string(c["index"].get<int>()) +
                     ": max_sepdeg = " + (c["max_sepdeg"].get<bool>() ? "true" : "false");
            if (c.contains("sepdeg"))
                human += ", sepdeg = " + std::to_string(c["sepdeg"].get<int>());
            human += "\n";
        }
        human += std::string("cbp_via_separators: ") +
                 (j["cbp_via_separators"].get<bool>() ? "true" : "false") + "\n";
        emit(j, opt, human);
        return 0;
    }

    if (cmd == "analyze") {
        PropertyReport rep = analyze(I, opt.check());
        json j = quotient_summary(A);
        j["command"] = "analyze";
        j["field"] = prob.field->to_string();
        j["gb_size"] = I.groebner_basis(TermOrdering::degrevlex()).gens().size();
        j["cbp"] = rep.cbp;
        j["locally_gorenstein"] = rep.locally_gorenstein;
        j["gor_and_cbp"] = rep.gor_and_cbp;
        j["strict_cbp"] = rep.strict_cbp;
        j["strict_gorenstein"] = rep.strict_gorenstein;
        j["symmetric_hf"] = rep.symmetric_hf;
        if (rep.cbp_failure_witness)
            j["cbp_failure_witness"] = field_elems_json(*rep.cbp_failure_witness);
        if (rep.gorenstein_generator)
            j["gorenstein_generator"] = field_elems_json(rep.gorenstein_generator->coeffs);
        if (rep.det_witness_point)
            j["det_witness_point"] = field_elems_json(*rep.det_witness_point);
        if (rep.field_used) j["field_used"] = rep.field_used->to_string();
        if (!prob.components.empty()) {
            DecompositionInput D = DecompositionInput::validate(I, prob.components);
            j["sepdeg"] = sepdeg_json(I, D, A);
            if (j["sepdeg"]["cbp_via_separators"].get<bool>() != rep.cbp)
                throw InconsistencyError("separator and canonical-module verdicts disagree");
        }
        j["elapsed_ms"] = elapsed_ms();

        std::string human;
        auto flag = [&](const char* n, bool v) {
            human += std::string(n) + ": " + (v ? "true" : "false") + "\n";
        };
        human += "dim = " + std::to_string(rep.dim) + ", ri = " + std::to_string(rep.ri) +
                 ", delta = " + std::to_string(rep.delta) + "\nhf =";
        for (int h : rep.hf) human += " " + std::to_string(h);
        human += "\n";
        flag("cbp", rep.cbp);
        flag("locally_gorenstein", rep.locally_gorenstein);
        flag("gor_and_cbp", rep.gor_and_cbp);
        flag("strict_cbp", rep.strict_cbp);
        flag("strict_gorenstein", rep.strict_gorenstein);
        flag("symmetric_hf", rep.symmetric_hf);
        emit(j, opt, human);
        return 0;
    }

    throw ProblemError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley-Bacharach and Gorenstein property checker for "
                 "zero-dimensional affine algebras"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> names = {"gb",         "hilbert",    "cbp",
                                      "gorenstein", "gor-cbp",    "strict-cbp",
                                      "strict-gorenstein", "sepdeg", "analyze"};
    std::string chosen;
    for (const auto& n : names) {
        auto* sub = app.add_subcommand(n);
        sub->add_option("file", opt.file, "problem file")->required();
        sub->add_flag("--json", opt.as_json, "emit a JSON report");
        sub->add_option("--det-mode", opt.det_mode, "symbolic|evaluated")
            ->check(CLI::IsMember({"symbolic", "evaluated"}));
        sub->add_option("--seed", opt.seed, "seed for the evaluated mode");
        sub->add_option("--max-extension", opt.max_extension,
                        "largest extension degree the evaluated mode may build");
        sub->callback([&chosen, n] { chosen = n; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run_command(chosen, opt);
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const ProblemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PolyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IdealError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const QuotientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SeparatorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CbpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
