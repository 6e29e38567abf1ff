// sepdiff: exact symbolic computation for differential algebra in
// characteristic p. Output is a machine-reparseable record of
// `key = value` lines; exit codes: 0 ok, 1 precondition violation,
// 2 parse error, 3 search exhausted, 4 internal invariant breach.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selftest.hpp"
#include "sepdiff/error.hpp"
#include "sepdiff/parser.hpp"
#include "sepdiff/prolongation.hpp"
#include "sepdiff/pstructure.hpp"
#include "sepdiff/quotient.hpp"
#include "sepdiff/reduction.hpp"

using namespace sepdiff;

namespace {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::ParseError: return 2;
        case Errc::Exhausted: return 3;
        case Errc::Internal: return 4;
        default: return 1;
    }
}

struct Report {
    std::vector<std::string> lines;

    void add(const std::string& key, const std::string& value) {
        lines.push_back(key + " = " + value);
    }
    void add_raw(const std::string& line) { lines.push_back(line); }
    void add_block(const std::string& block) {
        std::istringstream is(block);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty()) lines.push_back(line);
    }
    void print() const {
        for (const auto& l : lines) std::cout << l << "\n";
    }
};

[[noreturn]] void emit_error(const Error& e, int code) {
    std::cout << "error = " << e.code_name() << "\n";
    std::cout << "message = " << e.what() << "\n";
    std::exit(code);
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) {
        while (!cur.empty() && std::isspace(static_cast<unsigned char>(cur.front())))
            cur.erase(cur.begin());
        while (!cur.empty() && std::isspace(static_cast<unsigned char>(cur.back())))
            cur.pop_back();
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::uint64_t witness_budget() {
    if (const char* env = std::getenv("SEPDIFF_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000;
}

std::string tuple_string(const std::vector<RationalFunction>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].to_string();
    }
    return out + ")";
}

// Inputs parsed up front so malformed text maps to exit 2, while operation
// failures afterwards keep their own codes.
struct Inputs {
    FieldPresentation K;
    std::vector<std::string> vars;

    DiffPoly dpoly(const std::string& text) const { return parse_dpoly(text, K, vars); }
    RationalFunction element(const std::string& text) const {
        return parse_element(text, K);
    }
};

Inputs parse_inputs(const std::string& field_text, const std::string& vars_csv) {
    Inputs in;
    in.K = parse_field(field_text);
    in.vars = split_names(vars_csv);
    if (in.vars.empty()) in.vars = {"x"};
    return in;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact differential algebra over GF(p)(c1,...,cm)(t)"};
    app.require_subcommand(1);

    std::string field_text, vars_csv = "x", format = "record";
    auto add_common = [&](CLI::App* cmd, bool need_field = true) {
        if (need_field)
            cmd->add_option("--field", field_text, "field presentation, e.g. GF(5)(;t)")
                ->required();
        cmd->add_option("--vars", vars_csv, "ring variable names (comma separated)");
        cmd->add_option("--format", format, "output format (record)");
    };

    auto* cmd_field = app.add_subcommand("field", "parse and describe a field presentation");
    add_common(cmd_field);

    auto* cmd_dpoly = app.add_subcommand("dpoly", "rank calculus of a differential polynomial");
    add_common(cmd_dpoly);
    std::string dpoly_expr;
    bool dpoly_witness = false;
    cmd_dpoly->add_option("expr", dpoly_expr, "differential polynomial")->required();
    cmd_dpoly->add_flag("--nonvanishing", dpoly_witness,
                        "search a point of K where the polynomial does not vanish");

    auto* cmd_delta = app.add_subcommand("delta", "total derivative");
    add_common(cmd_delta);
    std::string delta_expr;
    std::uint32_t delta_times = 1;
    cmd_delta->add_option("expr", delta_expr, "differential polynomial")->required();
    cmd_delta->add_option("--times", delta_times, "number of applications");

    auto* cmd_reduce = app.add_subcommand("reduce", "Ritt reduction with certificate");
    add_common(cmd_reduce);
    std::string reduce_g, reduce_f;
    cmd_reduce->add_option("--g", reduce_g, "polynomial to reduce")->required();
    cmd_reduce->add_option("--f", reduce_f, "modulus")->required();

    auto* cmd_member = app.add_subcommand("member", "membership in [f]:s_f^inf");
    add_common(cmd_member);
    std::string member_f, member_g;
    bool member_assert = false;
    cmd_member->add_option("--ideal", member_f, "generator f")->required();
    cmd_member->add_option("--poly", member_g, "candidate member")->required();
    cmd_member->add_flag("--assert-irreducible", member_assert,
                         "accept caller-supplied irreducibility");

    auto* cmd_witness = app.add_subcommand("witness", "solvability witness for f=0, g!=0");
    add_common(cmd_witness);
    std::string witness_f, witness_g;
    bool witness_assert = false;
    cmd_witness->add_option("--f", witness_f, "equation")->required();
    cmd_witness->add_option("--g", witness_g, "inequation")->required();
    cmd_witness->add_flag("--assert-irreducible", witness_assert,
                          "accept caller-supplied irreducibility");

    auto* cmd_lambda = app.add_subcommand("lambda", "differential lambda functions");
    add_common(cmd_lambda);
    std::string lambda_b;
    std::vector<std::string> lambda_tuple;
    bool lambda_infinite_form = false;
    cmd_lambda->add_option("--b", lambda_b, "argument")->required();
    cmd_lambda->add_option("--a", lambda_tuple, "tuple entry (repeatable, infinite form)");
    cmd_lambda->add_flag("--infinite", lambda_infinite_form,
                         "use the infinite-form functions");

    auto* cmd_pindep = app.add_subcommand("pindep", "differential p-independence");
    add_common(cmd_pindep);
    std::vector<std::string> pindep_tuple;
    cmd_pindep->add_option("--a", pindep_tuple, "tuple entry (repeatable)");

    auto* cmd_basis = app.add_subcommand("basis", "differential p-basis and imperfection");
    add_common(cmd_basis);

    auto* cmd_prolong = app.add_subcommand("prolong", "prolongation equations of a variety");
    add_common(cmd_prolong);
    std::vector<std::string> prolong_exprs;
    cmd_prolong->add_option("exprs", prolong_exprs, "algebraic polynomials")->required();

    auto* cmd_adjoin = app.add_subcommand("adjoin", "extend the presentation");
    add_common(cmd_adjoin);
    std::string adjoin_root, adjoin_constants, adjoin_name;
    cmd_adjoin->add_option("--root", adjoin_root, "adjoin a p-th root of this constant generator");
    cmd_adjoin->add_option("--name", adjoin_name, "name for the adjoined root");
    cmd_adjoin->add_option("--constants", adjoin_constants,
                           "append fresh constant generators (comma separated)");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the property suites");
    std::uint64_t st_seed = 0;
    std::uint32_t st_cases = 25;
    cmd_selftest->add_option("--seed", st_seed, "random seed");
    cmd_selftest->add_option("--cases", st_cases, "cases per suite");
    cmd_selftest->add_option("--format", format, "output format (record)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << "error = UsageError\n";
        std::cout << "message = " << e.what() << "\n";
        return 2;
    }

    if (format != "record") {
        std::cout << "error = UsageError\n";
        std::cout << "message = unsupported format '" << format << "'\n";
        return 2;
    }

    Report rep;
    try {
        if (cmd_selftest->parsed()) {
            auto results = selftest::run_all(st_seed, st_cases);
            std::uint32_t passed = 0, failed = 0, total = 0;
            for (const auto& r : results) {
                rep.add("suite." + r.name,
                        (r.failed == 0 ? "pass" : "FAIL") + std::string(" (") +
                            std::to_string(r.cases - r.failed) + "/" +
                            std::to_string(r.cases) + ")");
                total += r.cases;
                failed += r.failed;
                passed += r.cases - r.failed;
            }
            rep.add("cases", std::to_string(total));
            rep.add("passed", std::to_string(passed));
            rep.add("failed", std::to_string(failed));
            rep.print();
            return failed == 0 ? 0 : 4;
        }

        Inputs in;
        try {
            in = parse_inputs(field_text, vars_csv);
        } catch (const Error& e) {
            emit_error(e, 2);
        }

        if (cmd_field->parsed()) {
            rep.add("field", in.K.to_string());
            rep.add("p", std::to_string(in.K.characteristic()));
            rep.add("m", std::to_string(in.K.num_constant_gens()));
            std::string gens = "(";
            for (std::uint32_t i = 0; i < in.K.num_constant_gens(); ++i) {
                if (i) gens += ",";
                gens += in.K.constant_gens()[i];
            }
            gens += ")";
            rep.add("constant_gens", gens);
            rep.add("has_diff_gen", in.K.has_diff_gen() ? "true" : "false");
        } else if (cmd_dpoly->parsed()) {
            DiffPoly f;
            try {
                f = in.dpoly(dpoly_expr);
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            rep.add("poly", f.to_string(in.vars));
            rep.add("order", std::to_string(f.order()));
            rep.add("leader", deriv_var_to_string(f.leader(), in.vars));
            rep.add("degree", std::to_string(f.degree()));
            Rank r = f.rank();
            rep.add("rank", "(" + std::to_string(r.order) + "," + std::to_string(r.degree) + ")");
            rep.add("separant", f.separant().to_string(in.vars));
            rep.add("initial", f.initial().to_string(in.vars));
            if (dpoly_witness) {
                auto w = nonvanishing_witness(f, witness_budget());
                if (!w)
                    fail(Errc::Exhausted, "no witness within the search budget");
                rep.add("witness", w->to_string());
                std::vector<RationalFunction> pt{*w};
                rep.add("value", f.evaluate(pt).to_string());
            }
        } else if (cmd_delta->parsed()) {
            DiffPoly f;
            try {
                f = in.dpoly(delta_expr);
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            rep.add("poly", f.to_string(in.vars));
            rep.add("delta", f.delta(delta_times).to_string(in.vars));
        } else if (cmd_reduce->parsed()) {
            DiffPoly g, f;
            try {
                g = in.dpoly(reduce_g);
                f = in.dpoly(reduce_f);
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            ReductionCertificate cert = full_reduce(g, f);
            if (!verify_certificate(cert, g, f))
                fail(Errc::Internal, "certificate failed verification");
            rep.add_block(certificate_record(cert, in.vars));
            rep.add("verified", "true");
        } else if (cmd_member->parsed()) {
            DiffPoly f, g;
            try {
                f = in.dpoly(member_f);
                g = in.dpoly(member_g);
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            SatIdeal P = make_satideal(f, member_assert);
            rep.add("ideal.f", P.generator.to_string(in.vars));
            rep.add("irreducibility", provenance_name(P.provenance));
            rep.add("member", member(g, P) ? "true" : "false");
            ReductionCertificate cert = full_reduce(g, f);
            if (!verify_certificate(cert, g, f))
                fail(Errc::Internal, "certificate failed verification");
            rep.add_block(certificate_record(cert, in.vars));
            rep.add("verified", "true");
        } else if (cmd_witness->parsed()) {
            DiffPoly f, g;
            try {
                f = in.dpoly(witness_f);
                g = in.dpoly(witness_g);
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            WitnessReport w = sdcf_witness(f, g, witness_assert);
            rep.add_block(witness_record(w, in.vars));
            rep.add("generic_point", w.generic_point.to_string(in.vars));
        } else if (cmd_lambda->parsed()) {
            RationalFunction b;
            std::vector<RationalFunction> tuple;
            try {
                b = in.element(lambda_b);
                for (const auto& s : lambda_tuple) tuple.push_back(in.element(s));
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            bool infinite = lambda_infinite_form || !lambda_tuple.empty();
            LambdaResult lam;
            if (infinite) {
                lam = lambda_infinite(tuple, b);
                rep.add("form", "infinite");
                rep.add("tuple", tuple_string(tuple));
            } else {
                lam = lambda_finite(b);
                rep.add("form", "finite");
                rep.add("basis", tuple_string(differential_p_basis(in.K)));
            }
            rep.add("b", b.to_string());
            for (std::size_t i = 0; i < lam.values.size(); ++i)
                rep.add("lambda[" + std::to_string(i) + "]", lam.values[i].to_string());
            rep.add("case", lambda_case_name(lam.tag));
        } else if (cmd_pindep->parsed()) {
            std::vector<RationalFunction> tuple;
            try {
                for (const auto& s : pindep_tuple) tuple.push_back(in.element(s));
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            rep.add("tuple", tuple_string(tuple));
            PMonomialSet mono = p_monomials(in.K, tuple);
            std::vector<PCoordinates> coords;
            for (const auto& m : mono.monomials) coords.push_back(p_coordinates(m));
            std::size_t rank = pth_power_rank(coords);
            rep.add("p_monomials", std::to_string(mono.monomials.size()));
            rep.add("rank", std::to_string(rank));
            rep.add("p_independent", is_p_independent(in.K, tuple) ? "true" : "false");
            rep.add("diff_p_independent",
                    is_diff_p_independent(in.K, tuple) ? "true" : "false");
        } else if (cmd_basis->parsed()) {
            ImperfectionDegrees d = degree_of_imperfection(in.K);
            rep.add("epsilon", std::to_string(d.epsilon));
            rep.add("e", std::to_string(d.e));
            rep.add("basis", tuple_string(differential_p_basis(in.K)));
            rep.add("differentially_perfect", d.epsilon == 0 ? "true" : "false");
        } else if (cmd_prolong->parsed()) {
            std::vector<DiffPoly> polys;
            try {
                for (const auto& s : prolong_exprs) polys.push_back(in.dpoly(s));
            } catch (const Error& e) {
                emit_error(e, 2);
            }
            AlgebraicSystem sys =
                make_algebraic_system(std::uint32_t(in.vars.size()), std::move(polys));
            ProlongedSystem tau = prolong(sys);
            std::vector<std::string> names = prolonged_var_names(in.vars);
            rep.add("arity", std::to_string(tau.arity));
            for (std::size_t i = 0; i < tau.pairs.size(); ++i) {
                rep.add("f[" + std::to_string(i) + "]", tau.pairs[i].first.to_string(names));
                rep.add("Df[" + std::to_string(i) + "]", tau.pairs[i].second.to_string(names));
            }
        } else if (cmd_adjoin->parsed()) {
            bool do_root = !adjoin_root.empty();
            bool do_constants = !adjoin_constants.empty();
            if (do_root == do_constants)
                fail(Errc::ParseError, "pass exactly one of --root or --constants");
            if (do_root) {
                auto [next, rw] = adjoin_pth_root(in.K, adjoin_root, adjoin_name);
                rep.add("presentation", next.to_string());
                rep.add("rewrite", rw.target + " -> " + rw.root_name + "^" +
                                       std::to_string(in.K.characteristic()));
                ImperfectionDegrees d = degree_of_imperfection(next);
                rep.add("epsilon", std::to_string(d.epsilon));
                rep.add("e", std::to_string(d.e));
            } else {
                FieldPresentation next =
                    extend_with_constants(in.K, split_names(adjoin_constants));
                rep.add("presentation", next.to_string());
                ImperfectionDegrees d = degree_of_imperfection(next);
                rep.add("epsilon", std::to_string(d.epsilon));
                rep.add("e", std::to_string(d.e));
            }
        }
    } catch (const Error& e) {
        emit_error(e, exit_code_for(e.code()));
    } catch (const std::exception& e) {
        std::cout << "error = Internal\n";
        std::cout << "message = " << e.what() << "\n";
        return 4;
    }

    rep.print();
    return 0;
}
