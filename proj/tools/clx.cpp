#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "clx/betti.hpp"
#include "clx/enumeration.hpp"
#include "clx/points.hpp"
#include "clx/text_io.hpp"

using namespace clx;

namespace {

struct CliError {
    int code;
    std::string kind;
    std::string detail;
};

// --ideal accepts inline JSON, "@path", or "-" for stdin
MonomialIdeal read_ideal(const std::string& arg) {
    std::string text = arg;
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw DomainError("cannot open ideal file: " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("ideal argument is not valid JSON");
    return ideal_from_json(j);
}

struct VerifyCase {
    CLRing ring;
    HilbertPoly poly;
    long long budget = 1000000;
    int imax = 6;
};

std::vector<VerifyCase> read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open matrix file: " + path);
    std::vector<VerifyCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        VerifyCase c;
        bool have_ring = false, have_poly = false;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw DomainError("malformed matrix entry: " + tok);
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "ring") {
                c.ring = CLRing::parse(val);
                have_ring = true;
            } else if (key == "poly") {
                c.poly = HilbertPoly::parse(val);
                have_poly = true;
            } else if (key == "budget") {
                c.budget = std::stoll(val);
            } else if (key == "imax") {
                c.imax = std::stoi(val);
            } else {
                throw DomainError("unknown matrix key: " + key);
            }
        }
        if (!have_ring && !have_poly) continue; // blank/comment line
        if (!have_ring || !have_poly)
            throw DomainError("matrix line needs both ring= and poly=");
        cases.push_back(std::move(c));
    }
    return cases;
}

bool table_dominates(const BettiTable& big, const BettiTable& small) {
    std::vector<Int> a = big.totals(), b = small.totals();
    for (size_t i = 0; i < b.size(); ++i) {
        Int lhs = i < a.size() ? a[i] : Int(0);
        if (b[i] > lhs) return false;
    }
    return true;
}

Json run_axioms_case(const VerifyCase& c) {
    Json out = Json::object();
    EnumerationBudget eb;
    eb.max_candidates = c.budget;
    std::vector<MonomialIdeal> witnesses = strongly_stable_points(c.poly, c.ring, eb);
    bool all = true;
    Json axioms = Json::array();
    for (const auto& r : check_all_axioms(c.poly, c.ring, witnesses)) {
        all = all && r.pass;
        axioms.push_back(axiom_to_json(r));
    }
    // hyperplane-section and linear-forms consequences over all witnesses
    bool hyper = true, linear = true;
    for (const auto& J : witnesses) {
        for (int h = 1; h <= 3; ++h) hyper = hyper && hyperplane_check(c.poly, c.ring, J, h);
        linear = linear && linear_forms_check(c.poly, c.ring, J);
    }
    out["axioms"] = axioms;
    out["hyperplane_sections"] = hyper;
    out["linear_forms"] = linear;
    out["pass"] = all && hyper && linear;
    return out;
}

Json run_bounds_case(const VerifyCase& c, const FieldSpec& f) {
    Json out = Json::object();
    EnumerationBudget eb;
    eb.max_candidates = c.budget;
    std::vector<MonomialIdeal> points = strongly_stable_points(c.poly, c.ring, eb);
    MonomialIdeal E = exp_point(c.poly, c.ring);
    BettiTable ext = betti_ambient(E, f);
    bool pass = true;
    Json violations = Json::array();
    for (const auto& J : points) {
        BettiTable t = betti_ambient(J, f);
        bool ok = table_dominates(ext, t);
        if (J == E) ok = ok && t == ext;
        if (!ok) {
            pass = false;
            violations.push_back(ideal_to_json(J));
        }
    }
    out["points"] = static_cast<int>(points.size());
    out["extremal"] = ideal_to_json(E);
    out["violations"] = violations;
    out["pass"] = pass;
    return out;
}

Json run_infinite_case(const VerifyCase& c, const FieldSpec& f) {
    Json out = Json::object();
    for (const auto& d : c.ring.degrees())
        if (d.is_finite() && d.finite() != 2)
            throw DomainError("infinite suite needs degrees in {2, inf}");
    EnumerationBudget eb;
    eb.max_candidates = c.budget;
    std::vector<MonomialIdeal> points = strongly_stable_points(c.poly, c.ring, eb);
    MonomialIdeal E = exp_point(c.poly, c.ring);
    BettiTable ext = betti_resolution_oracle(E, ResolutionBase::Quotient, f, c.imax);
    std::vector<Int> rec = betti_quadratic_recursion(E, c.imax);
    bool rec_ok = ext.totals() == rec;
    bool pass = rec_ok;
    Json violations = Json::array();
    for (const auto& J : points) {
        BettiTable t = betti_resolution_oracle(J, ResolutionBase::Quotient, f, c.imax);
        bool ok = table_dominates(ext, t);
        std::vector<Int> jr = betti_quadratic_recursion(J, c.imax);
        ok = ok && t.totals() == jr;
        if (!ok) {
            pass = false;
            violations.push_back(ideal_to_json(J));
        }
    }
    out["points"] = static_cast<int>(points.size());
    out["recursion_matches_oracle"] = rec_ok;
    out["violations"] = violations;
    out["pass"] = pass;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinguished points on Hilbert schemes of Clements-Lindstrom "
                 "schemes and their Betti-number bounds"};
    app.require_subcommand(1);

    std::string ring_arg, poly_arg, ideal_arg, kind = "lex", over = "ambient";
    std::string format = "json", suite = "all", matrix_path;
    long long char_arg = 0;
    int imax = 6, jmax = -1;
    int max_degree = -1;
    bool almost = false;

    Json doc;
    int exit_code = 0;

    auto add_ring = [&](CLI::App* c) {
        c->add_option("--ring", ring_arg, "degree sequence, e.g. 2,3,inf,inf")->required();
    };
    auto add_poly = [&](CLI::App* c) {
        c->add_option("--poly", poly_arg, "Hilbert polynomial in z, e.g. \"3*z+5\"")
            ->required();
    };
    auto add_ideal = [&](CLI::App* c) {
        c->add_option("--ideal", ideal_arg, "ideal as JSON, @file, or - for stdin")
            ->required();
    };

    auto* check = app.add_subcommand(
        "check", "decide whether the Hilbert scheme for (ring, poly) is nonempty");
    add_ring(check);
    add_poly(check);
    check->callback([&] {
        CLRing r = CLRing::parse(ring_arg);
        HilbertPoly p = HilbertPoly::parse(poly_arg);
        if (!hilb_nonempty(p, r))
            throw CliError{2, "empty-hilbert-scheme",
                           "no saturated ideal of " + r.str() +
                               " has quotient Hilbert polynomial " + p.str()};
        doc["ring"] = r.str();
        doc["poly"] = poly_to_json(p);
        doc["nonempty"] = true;
    });

    auto* hf = app.add_subcommand("hf", "Hilbert function values of R/I");
    add_ideal(hf);
    hf->add_option("--max-degree", max_degree, "largest degree reported");
    hf->callback([&] {
        MonomialIdeal I = read_ideal(ideal_arg);
        int hi = max_degree >= 0 ? max_degree : hf_hp_threshold(I) + 3;
        doc["ideal"] = ideal_to_json(I);
        Json vals = Json::array();
        for (int j = 0; j <= hi; ++j) vals.push_back(I.quotient_hf(j));
        doc["values"] = vals;
        doc["threshold"] = hf_hp_threshold(I);
    });

    auto* hp = app.add_subcommand("hp", "Hilbert polynomial of R/I");
    add_ideal(hp);
    hp->callback([&] {
        MonomialIdeal I = read_ideal(ideal_arg);
        doc["ideal"] = ideal_to_json(I);
        doc["poly"] = poly_to_json(hilbert_polynomial(I));
        doc["threshold"] = hf_hp_threshold(I);
    });

    auto* lex = app.add_subcommand("lex", "lexicographic point for (ring, poly)");
    add_ring(lex);
    add_poly(lex);
    lex->callback([&] {
        doc = ideal_to_json(lex_point(HilbertPoly::parse(poly_arg), CLRing::parse(ring_arg)));
    });

    auto* exp = app.add_subcommand("exp", "expansive point for (ring, poly)");
    add_ring(exp);
    add_poly(exp);
    exp->callback([&] {
        doc = ideal_to_json(exp_point(HilbertPoly::parse(poly_arg), CLRing::parse(ring_arg)));
    });

    auto* chain = app.add_subcommand("chain", "generator-replacement chain to the point");
    add_ring(chain);
    add_poly(chain);
    chain->add_option("--kind", kind, "lex|exp")->check(CLI::IsMember({"lex", "exp"}));
    chain->callback([&] {
        SelectionRule rule = kind == "exp" ? SelectionRule::Exp : SelectionRule::Lex;
        doc = chain_to_json(
            point_chain(HilbertPoly::parse(poly_arg), CLRing::parse(ring_arg), rule));
    });

    auto* enumerate =
        app.add_subcommand("enumerate", "all saturated strongly stable points");
    add_ring(enumerate);
    add_poly(enumerate);
    enumerate->add_flag("--almost-lex", almost, "keep only almost lex points");
    enumerate->add_option("--max-degree", max_degree,
                          "cap on generator degrees (may lose completeness)");
    long long node_budget = 1000000;
    enumerate->add_option("--budget", node_budget, "search node cutoff");
    enumerate->callback([&] {
        CLRing r = CLRing::parse(ring_arg);
        HilbertPoly p = HilbertPoly::parse(poly_arg);
        EnumerationBudget eb;
        eb.max_candidates = node_budget;
        bool complete = true;
        if (max_degree >= 0) {
            eb.max_gen_degree = max_degree;
            auto g = gotzmann_number(p);
            int needed = g ? *g : 0;
            for (const auto& d : r.degrees())
                if (d.is_finite()) needed = std::max(needed, d.finite());
            complete = g && max_degree >= needed;
        }
        auto points = almost ? almost_lex_points(p, r, eb) : strongly_stable_points(p, r, eb);
        Json arr = Json::array();
        for (const auto& I : points) arr.push_back(ideal_to_json(I));
        doc["points"] = arr;
        doc["complete"] = complete;
    });

    auto* classify_cmd = app.add_subcommand("classify", "predicate flags of an ideal");
    add_ideal(classify_cmd);
    classify_cmd->callback([&] {
        MonomialIdeal I = read_ideal(ideal_arg);
        IdealClass c = classify(I);
        doc["ideal"] = ideal_to_json(I);
        doc["saturated"] = c.saturated;
        doc["strongly_stable"] = c.strongly_stable;
        doc["lex"] = c.lex;
        doc["almost_lex"] = c.almost_lex;
        if (c.saturated) doc["expansive"] = is_expansive(I);
    });

    auto* ccase = app.add_subcommand("classify-case",
                                     "when do the lex and expansive points coincide");
    add_ring(ccase);
    add_poly(ccase);
    ccase->callback([&] {
        doc["case"] = to_string(
            lex_eq_exp_case(HilbertPoly::parse(poly_arg), CLRing::parse(ring_arg)));
    });

    auto* axioms = app.add_subcommand("check-axioms",
                                      "defining properties of the expansive point");
    add_ring(axioms);
    add_poly(axioms);
    axioms->callback([&] {
        CLRing r = CLRing::parse(ring_arg);
        HilbertPoly p = HilbertPoly::parse(poly_arg);
        std::vector<MonomialIdeal> witnesses = strongly_stable_points(p, r);
        Json arr = Json::array();
        bool all = true;
        for (const auto& res : check_all_axioms(p, r, witnesses)) {
            all = all && res.pass;
            arr.push_back(axiom_to_json(res));
        }
        doc["axioms"] = arr;
        doc["pass"] = all;
    });

    auto* betti = app.add_subcommand("betti", "graded Betti table of R/I");
    add_ideal(betti);
    betti->add_option("--over", over, "ambient|quotient")
        ->check(CLI::IsMember({"ambient", "quotient"}));
    betti->add_option("--char", char_arg, "field characteristic (0 or prime)");
    betti->add_option("--imax", imax, "homological window (quotient base only)");
    betti->add_option("--jmax", jmax, "internal-degree window (quotient base only)");
    betti->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    betti->callback([&] {
        MonomialIdeal I = read_ideal(ideal_arg);
        FieldSpec f{char_arg};
        BettiTable t = over == "ambient"
                           ? betti_ambient(I, f)
                           : betti_resolution_oracle(I, ResolutionBase::Quotient, f,
                                                     imax, jmax);
        if (format == "csv") {
            std::cout << betti_to_csv(t);
            std::exit(0);
        }
        doc = betti_to_json(t);
    });

    auto* bounds = app.add_subcommand("bounds",
                                      "extremal Betti bounds for (ring, poly)");
    add_ring(bounds);
    add_poly(bounds);
    bounds->add_option("--char", char_arg, "field characteristic (0 or prime)");
    bounds->callback([&] {
        doc = bounds_to_json(bounds_report(HilbertPoly::parse(poly_arg),
                                           CLRing::parse(ring_arg), FieldSpec{char_arg}));
    });

    auto* verify = app.add_subcommand("verify", "run a verification suite over a matrix");
    verify->add_option("--suite", suite, "axioms|bounds|infinite|all")
        ->check(CLI::IsMember({"axioms", "bounds", "infinite", "all"}));
    verify->add_option("--matrix", matrix_path, "case file: ring=.. poly=.. per line")
        ->required();
    verify->add_option("--char", char_arg, "field characteristic (0 or prime)");
    verify->callback([&] {
        FieldSpec f{char_arg};
        std::vector<VerifyCase> cases = read_matrix(matrix_path);
        Json arr = Json::array();
        bool all = true;
        for (const auto& c : cases) {
            Json entry = Json::object();
            entry["ring"] = c.ring.str();
            entry["poly"] = c.poly.str();
            bool pass = true;
            bool quad_ring = true;
            for (const auto& d : c.ring.degrees())
                if (d.is_finite() && d.finite() != 2) quad_ring = false;
            if (suite == "axioms" || suite == "all") {
                Json r = run_axioms_case(c);
                pass = pass && r["pass"].get<bool>();
                entry["axioms"] = std::move(r);
            }
            if (suite == "bounds" || suite == "all") {
                Json r = run_bounds_case(c, f);
                pass = pass && r["pass"].get<bool>();
                entry["bounds"] = std::move(r);
            }
            if (suite == "infinite" || (suite == "all" && quad_ring)) {
                Json r = run_infinite_case(c, f);
                pass = pass && r["pass"].get<bool>();
                entry["infinite"] = std::move(r);
            }
            entry["pass"] = pass;
            all = all && pass;
            arr.push_back(std::move(entry));
        }
        doc["suite"] = suite;
        doc["cases"] = arr;
        doc["pass"] = all;
        if (!all) exit_code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const CliError& e) {
        Json err;
        err["error"] = {{"kind", e.kind}, {"detail", e.detail}};
        std::cout << err.dump(2) << std::endl;
        return e.code;
    } catch (const DomainError& e) {
        Json err;
        err["error"] = {{"kind", "invalid-input"}, {"detail", e.what()}};
        std::cout << err.dump(2) << std::endl;
        return 2;
    } catch (const BudgetExceeded& e) {
        Json err;
        err["error"] = {{"kind", "budget-exceeded"}, {"detail", e.what()}};
        std::cout << err.dump(2) << std::endl;
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = {{"kind", "internal"}, {"detail", e.what()}};
        std::cout << err.dump(2) << std::endl;
        return 1;
    }

    if (!doc.is_null()) std::cout << doc.dump(2) << std::endl;
    return exit_code;
}
