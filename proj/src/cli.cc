// Copyright 2026 The lusym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lusym/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lusym/analysis.h"
#include "lusym/errors.h"
#include "lusym/fixtures.h"
#include "lusym/serialize.h"

namespace lusym {

namespace {

struct GlobalOptions {
    bool json = false;
    bool text = false;
    double tolerance = kDefaultTolerance;
    uint64_t seed = kDefaultSeed;
};

// Where a command gets its state or support from.
struct Source {
    std::string input;
    std::string fixture_name;
    std::string support;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PureState load_state(const Source &src) {
    if (!src.input.empty()) {
        try {
            return parse_state(read_file(src.input));
        } catch (const InputError &e) {
            throw InputError(src.input + ": " + e.what());
        }
    }
    if (!src.fixture_name.empty()) {
        return fixture(src.fixture_name);
    }
    throw InputError("one of --input or --fixture is required");
}

struct SupportInput {
    Support support;
    std::optional<PureState> state;
};

SupportInput load_support(const Source &src) {
    if (!src.support.empty()) {
        return {Support::parse(src.support), std::nullopt};
    }
    if (src.input.empty() && src.fixture_name.empty()) {
        throw InputError("one of --support, --input or --fixture is required");
    }
    PureState psi = load_state(src);
    return {psi.support(), psi};
}

std::string canonical_input(const SupportInput &in) {
    return in.state ? serialize_state(*in.state) : in.support.str();
}

std::string fmt_double(double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
}

std::string fmt_complex(std::complex<double> z) {
    if (std::abs(z.imag()) < 1e-15) {
        return fmt_double(z.real());
    }
    return "(" + fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt_double(std::abs(z.imag())) + "i)";
}

std::string fmt_angle(const Angle &a) {
    if (a.num() == 0) {
        return "0";
    }
    return a.num().get_str() + "/" + a.den().get_str();
}

std::string fmt_phase_vector(const PhaseVector &g) {
    std::string s = "phis=(";
    for (size_t k = 0; k < g.phis.size(); k++) {
        s += (k ? ", " : "") + fmt_angle(g.phis[k]);
    }
    return s + ") theta=" + fmt_angle(g.theta) + " (turns)";
}

std::string fmt_vector(const IntVector &v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); k++) {
        s += (k ? ", " : "") + v[k].get_str();
    }
    return s + ")";
}

void print_group_text(std::ostream &out, const DiagonalSymmetryGroup &g) {
    out << "symmetry group: torus rank " << g.torus_rank() << ", theta "
        << (g.theta_continuous() ? "continuous" : "discrete") << "\n";
    for (const auto &v : g.torus_basis) {
        out << "  torus direction " << fmt_vector(v) << "\n";
    }
    for (const auto &f : g.finite) {
        out << "  finite order " << f.order.get_str() << ": " << fmt_phase_vector(f.generator) << "\n";
    }
    if (auto order = g.order()) {
        out << "  group order " << order->get_str() << "\n";
    }
}

void print_catalog_text(std::ostream &out, const CircuitCatalog &c) {
    size_t n = c.support.num_qubits();
    out << "support: " << c.support.str() << "\n";
    out << "circuits: " << c.circuits.size() << (c.semistable ? " (semistable)" : " (no positive circuit)") << "\n";
    out << std::left << std::setw(40) << "  members" << std::setw(24) << "relation" << std::setw(9) << "d_order"
        << "hull\n";
    for (const auto &circuit : c.circuits) {
        std::string members;
        for (size_t j = 0; j < circuit.size(); j++) {
            members += (j ? "," : "") + label_string(n, circuit.member_labels[j]);
        }
        out << "  " << std::setw(38) << members << std::setw(24) << fmt_vector(circuit.relation) << std::setw(9)
            << circuit.d_order.get_str() << to_string(polytope_classification(circuit)) << "\n";
    }
}

void print_normalizer_text(std::ostream &out, const NormalizerDescription &d) {
    size_t n = d.torus.n;
    out << "normalizer: full diagonal torus x flip group of order 2^" << d.flips.order_log2()
        << (d.assumption_ok ? "" : "  [advisory: some qubit has trivial action]") << "\n";
    if (d.flips.elements) {
        out << "  flips:";
        for (uint64_t m : *d.flips.elements) {
            out << " " << label_string(n, m);
        }
        out << "\n";
    }
    out << "  trivial qubits:";
    bool any = false;
    for (size_t k = 0; k < n; k++) {
        if (d.qubit_profile.trivial[k]) {
            out << " " << (k + 1);
            any = true;
        }
    }
    out << (any ? "\n" : " none\n");
}

void print_report_text(std::ostream &out, const AnalysisReport &r) {
    out << "state on " << r.support.num_qubits() << " qubits, " << r.support.size() << " basis labels\n";
    print_group_text(out, r.group);
    print_catalog_text(out, r.catalog);
    for (const auto &mv : r.monomials) {
        auto bd = mv.monomial.bidegree();
        out << "  monomial " << mv.monomial.str() << "  bidegree (" << bd.a << "," << bd.b << ")"
            << (mv.sl_type ? " SL" : "") << "  value " << fmt_complex(mv.value) << "\n";
    }
    print_normalizer_text(out, r.normalizer);
    out << "balance defects:";
    for (double d : r.defects) {
        out << " " << fmt_double(d);
    }
    out << "\n";
    out << "single SL generator: " << (r.single_generator.hypothesis_holds ? "yes" : "no") << " ("
        << r.single_generator.detail << ")\n";
    out << "verification: max deviation " << fmt_double(r.verification.max_deviation) << " over "
        << r.verification.elements_checked << " elements, seed " << r.verification.seed << " -> "
        << (r.verification.passed ? "pass" : "FAIL") << "\n";
    out << "semistable: " << (r.semistable ? "yes" : "no") << ", generic: " << (r.generic ? "yes" : "no")
        << ", theta continuous: " << (r.theta_continuous ? "yes" : "no") << "\n";
    for (const auto &note : r.notes) {
        out << "note: " << note << "\n";
    }
}

Json invariants_json(const SupportInput &in) {
    const Support &s = in.support;
    CircuitCatalog catalog = enumerate_circuits(s);
    NormalizerDescription norm = compute_normalizer(s);
    std::vector<uint64_t> flips = norm.flips.elements.value_or(std::vector<uint64_t>{0});

    Json monomials = Json::array();
    Json symmetrized = Json::array();
    for (const auto &c : catalog.circuits) {
        InvariantMonomial m = monomial_from_circuit(c);
        Json mj = monomial_to_json(m);
        mj["circuit"] = circuit_to_json(c);
        mj["value"] = in.state ? complex_to_json(evaluate(m, *in.state)) : Json(nullptr);
        monomials.push_back(mj);

        auto sym = symmetrize_over_flips(m, flips);
        Json sj = {{"seed_monomial", m.str()}};
        if (auto *sum = std::get_if<InvariantSum>(&sym)) {
            Json terms = Json::array();
            for (const auto &t : sum->monomials) {
                terms.push_back(t.str());
            }
            sj["admitted"] = true;
            sj["monomials"] = terms;
            sj["rejection"] = nullptr;
            sj["value"] = in.state ? complex_to_json(evaluate(*sum, *in.state)) : Json(nullptr);
        } else {
            sj["admitted"] = false;
            sj["monomials"] = Json::array();
            sj["rejection"] = std::get<FlipRejection>(sym).reason;
            sj["value"] = nullptr;
        }
        symmetrized.push_back(sj);
    }
    Json abs_squares = Json::array();
    for (const auto &m : abs_square_generators(s)) {
        Json mj = monomial_to_json(m);
        mj["value"] = in.state ? complex_to_json(evaluate(m, *in.state)) : Json(nullptr);
        abs_squares.push_back(mj);
    }
    Json defects = Json::array();
    auto polys = balance_defect_polynomials(s);
    for (size_t k = 0; k < polys.size(); k++) {
        Json terms = Json::array();
        for (const auto &t : polys[k].terms) {
            terms.push_back({{"coefficient", t.coefficient},
                             {"label", label_string(s.num_qubits(), t.monomial.terms().front().label)}});
        }
        defects.push_back({{"qubit", k + 1},
                           {"terms", terms},
                           {"value", in.state ? Json(evaluate(polys[k], *in.state).real()) : Json(nullptr)}});
    }
    return {{"provenance", provenance(canonical_input(in))},
            {"n", s.num_qubits()},
            {"support", support_to_json(s)},
            {"monomials", monomials},
            {"abs_square_generators", abs_squares},
            {"flip_group", flip_group_to_json(norm.flips)},
            {"symmetrized", symmetrized},
            {"single_sl_generator", single_generator_to_json(single_sl_generator_check(catalog))},
            {"balance_defects", defects}};
}

void print_invariants_text(std::ostream &out, const Json &j) {
    out << "support: ";
    for (size_t k = 0; k < j["support"].size(); k++) {
        out << (k ? "," : "") << j["support"][k].get<std::string>();
    }
    out << "\n";
    for (const auto &m : j["monomials"]) {
        out << "  circuit monomial " << m["expression"].get<std::string>() << "  bidegree ("
            << m["bidegree"][0].get<int>() << "," << m["bidegree"][1].get<int>() << ")"
            << (m["sl_type"].get<bool>() ? " SL" : "");
        if (!m["value"].is_null()) {
            out << "  value " << fmt_complex({m["value"][0].get<double>(), m["value"][1].get<double>()});
        }
        out << "\n";
    }
    for (const auto &sj : j["symmetrized"]) {
        out << "  flip-symmetrized " << sj["seed_monomial"].get<std::string>() << ": ";
        if (sj["admitted"].get<bool>()) {
            out << sj["monomials"].size() << " term(s)\n";
        } else {
            out << "rejected, " << sj["rejection"].get<std::string>() << "\n";
        }
    }
    out << "  |c_j|^2 generators: " << j["abs_square_generators"].size() << "\n";
    out << "  single SL generator: " << (j["single_sl_generator"]["hypothesis_holds"].get<bool>() ? "yes" : "no")
        << " (" << j["single_sl_generator"]["detail"].get<std::string>() << ")\n";
}

void emit(std::ostream &out, const GlobalOptions &g, const Json &j, const std::function<void()> &text) {
    if (g.json) {
        out << dump(j);
    } else {
        text();
    }
}

void add_source_options(CLI::App *cmd, Source &src, bool with_support) {
    auto *input = cmd->add_option("--input", src.input, "State JSON file");
    auto *fix = cmd->add_option("--fixture", src.fixture_name, "Named reference state (see `fixtures --list`)");
    input->excludes(fix);
    if (with_support) {
        auto *sup = cmd->add_option("--support", src.support, "Comma-separated bit strings, e.g. 00,11");
        sup->excludes(input);
        sup->excludes(fix);
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Locally diagonal symmetry groups, balanced circuits and entanglement invariants of sparse qubit states",
                 "lusym"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    auto *json_flag = app.add_flag("--json", g.json, "Emit JSON (the stable output contract)");
    auto *text_flag = app.add_flag("--text", g.text, "Emit human-readable text (default)");
    json_flag->excludes(text_flag);
    app.add_option("--tolerance", g.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for random torus sampling");

    Source analyze_src;
    size_t analyze_samples = 16;
    auto *analyze_cmd = app.add_subcommand("analyze", "Full analysis of one state");
    add_source_options(analyze_cmd, analyze_src, false);
    analyze_cmd->add_option("--samples", analyze_samples, "Random torus points for verification")
        ->check(CLI::PositiveNumber);

    Source circuits_src;
    auto *circuits_cmd = app.add_subcommand("circuits", "List the balanced circuits of a support");
    add_source_options(circuits_cmd, circuits_src, true);

    Source invariants_src;
    auto *invariants_cmd = app.add_subcommand("invariants", "Circuit monomials, flip sums and balance defects");
    add_source_options(invariants_cmd, invariants_src, true);

    Source normalizer_src;
    auto *normalizer_cmd = app.add_subcommand("normalizer", "Symmetry-preserving torus and spin flips");
    add_source_options(normalizer_cmd, normalizer_src, true);

    Source verify_src;
    std::string group_file;
    bool from_support = false;
    size_t verify_samples = 16;
    auto *verify_cmd = app.add_subcommand("verify", "Numerically check that a group fixes a state");
    add_source_options(verify_cmd, verify_src, false);
    auto *group_opt = verify_cmd->add_option("--group", group_file, "Group JSON file");
    auto *from_opt = verify_cmd->add_flag("--from-support", from_support, "Use the group solved from the support");
    group_opt->excludes(from_opt);
    verify_cmd->add_option("--samples", verify_samples, "Random torus points")->check(CLI::PositiveNumber);

    std::string support_a;
    std::string support_b;
    auto *compare_cmd = app.add_subcommand("compare", "Order two symmetry strata by closure");
    compare_cmd->add_option("--support-a", support_a, "First support")->required();
    compare_cmd->add_option("--support-b", support_b, "Second support")->required();

    bool list_fixtures = false;
    std::string fixture_name;
    std::string write_dir;
    auto *fixtures_cmd = app.add_subcommand("fixtures", "List or print the reference states");
    fixtures_cmd->add_flag("--list", list_fixtures, "List fixture names");
    fixtures_cmd->add_option("--name", fixture_name, "Print one fixture as state JSON");
    fixtures_cmd->add_option("--write", write_dir, "Write every fixture to DIR/<name>.json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (analyze_cmd->parsed()) {
            AnalysisReport r = analyze(load_state(analyze_src), {g.tolerance, g.seed, analyze_samples});
            emit(out, g, report_to_json(r), [&] { print_report_text(out, r); });
            return kExitOk;
        }
        if (circuits_cmd->parsed()) {
            SupportInput in = load_support(circuits_src);
            CircuitCatalog c = enumerate_circuits(in.support);
            Json j = catalog_to_json(c);
            j["provenance"] = provenance(canonical_input(in));
            emit(out, g, j, [&] { print_catalog_text(out, c); });
            return kExitOk;
        }
        if (invariants_cmd->parsed()) {
            Json j = invariants_json(load_support(invariants_src));
            emit(out, g, j, [&] { print_invariants_text(out, j); });
            return kExitOk;
        }
        if (normalizer_cmd->parsed()) {
            SupportInput in = load_support(normalizer_src);
            NormalizerDescription d = compute_normalizer(in.support);
            DiagonalSymmetryGroup h = solve_symmetry_group(in.support);
            Json j = {{"provenance", provenance(canonical_input(in))},
                      {"support", support_to_json(in.support)},
                      {"group", group_to_json(h)},
                      {"normalizer", normalizer_to_json(d)}};
            emit(out, g, j, [&] {
                out << "support: " << in.support.str() << "\n";
                print_group_text(out, h);
                print_normalizer_text(out, d);
            });
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            PureState psi = load_state(verify_src);
            DiagonalSymmetryGroup h;
            if (!group_file.empty()) {
                try {
                    h = parse_group(read_file(group_file));
                } catch (const InputError &e) {
                    throw InputError(group_file + ": " + e.what());
                }
            } else if (from_support) {
                h = solve_symmetry_group(psi.support());
            } else {
                throw InputError("one of --group or --from-support is required");
            }
            SymmetryVerification v = verify_symmetry(psi, h, verify_samples, g.tolerance, g.seed);
            Json j = {{"provenance", provenance(serialize_state(psi))},
                      {"group", group_to_json(h)},
                      {"verification", verification_to_json(v)}};
            emit(out, g, j, [&] {
                print_group_text(out, h);
                out << "max deviation " << fmt_double(v.max_deviation) << " (tolerance " << fmt_double(v.tolerance)
                    << ") -> " << (v.passed ? "pass" : "FAIL") << "\n";
            });
            return v.passed ? kExitOk : kExitCheckFailed;
        }
        if (compare_cmd->parsed()) {
            Support a = Support::parse(support_a);
            Support b = Support::parse(support_b);
            StrataOrder order = compare_strata(a, b);
            Json j = {{"provenance", provenance(a.str() + ";" + b.str())},
                      {"support_a", support_to_json(a)},
                      {"support_b", support_to_json(b)},
                      {"group_a", group_to_json(solve_symmetry_group(a))},
                      {"group_b", group_to_json(solve_symmetry_group(b))},
                      {"verdict", std::string(to_string(order))}};
            emit(out, g, j, [&] { out << to_string(order) << "\n"; });
            return kExitOk;
        }
        if (fixtures_cmd->parsed()) {
            if (!fixture_name.empty()) {
                out << serialize_state(fixture(fixture_name));
                return kExitOk;
            }
            if (!write_dir.empty()) {
                std::filesystem::create_directories(write_dir);
                for (const auto &name : fixture_names()) {
                    std::ofstream f(std::filesystem::path(write_dir) / (name + ".json"), std::ios::binary);
                    f << serialize_state(fixture(name));
                    if (!f) {
                        throw InputError("cannot write fixture '" + name + "' to " + write_dir);
                    }
                }
                return kExitOk;
            }
            if (g.json) {
                out << dump(Json(fixture_names()));
            } else {
                for (const auto &name : fixture_names()) {
                    out << name << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InvariantViolation &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInvalidInput;
}

}  // namespace lusym
