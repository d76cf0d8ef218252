// qalg: load, validate, lift and classify structure-constant presentations
// of finite-dimensional rational algebras, with deterministic JSON reports.

#include "qalg/algebra.hpp"
#include "qalg/algebra_json.hpp"
#include "qalg/classify.hpp"
#include "qalg/lifting.hpp"
#include "qalg/structure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using qalg::AlgebraPtr;
using qalg::Element;
using qalg::Rational;
using qalg::Subspace;
using qalg::Vec;
using ordered_json = nlohmann::ordered_json;

// Usage / input-shape problem: exit 3 with a one-line message.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("could not open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

Vec parse_coords(const std::string& text, std::size_t n, const std::string& what) {
    Vec out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        // strip spaces
        std::size_t a = cur.find_first_not_of(" \t");
        std::size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) throw UsageError(what + ": empty coordinate");
        try {
            out.push_back(Rational::parse(cur.substr(a, b - a + 1)));
        } catch (const std::exception& e) {
            throw UsageError(what + ": " + e.what());
        }
    }
    if (out.size() != n) {
        throw UsageError(what + ": expected " + std::to_string(n) + " coordinates, got " +
                         std::to_string(out.size()));
    }
    return out;
}

ordered_json coords_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& c : v) a.push_back(c.str());
    return a;
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(coords_json(s.basis_vector(r)));
    return rows;
}

ordered_json support_json(const std::vector<std::size_t>& path) {
    ordered_json a = ordered_json::array();
    for (std::size_t v : path) a.push_back(v);
    return a;
}

struct Output {
    bool json = false;
    ordered_json report;
    std::vector<std::string> lines;  // human-readable alternative

    void say(std::string line) { lines.push_back(std::move(line)); }

    void flush() const {
        if (json) {
            std::cout << report.dump(2) << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
    }
};

AlgebraPtr load_algebra_checked(const std::string& path, std::string& digest) {
    std::string bytes = read_file(path);
    digest = fnv1a64_hex(bytes);
    return qalg::algebra_from_json_string(bytes);
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& path, Output& out) {
    std::string digest;
    AlgebraPtr a = load_algebra_checked(path, digest);
    qalg::ValidationReport rep = qalg::validate(*a);
    out.report["command"] = "validate";
    out.report["file"] = path;
    out.report["digest"] = digest;
    out.report["name"] = a->name();
    out.report["dim"] = a->dim();
    out.report["ok"] = rep.ok;
    if (rep.ok) {
        out.say("validate: " + a->name() + " [dim " + std::to_string(a->dim()) + "] ok");
        return 0;
    }
    ordered_json failure;
    switch (rep.kind) {
        case qalg::ValidationReport::Failure::Shape: failure["kind"] = "shape"; break;
        case qalg::ValidationReport::Failure::Unit: failure["kind"] = "unit"; break;
        case qalg::ValidationReport::Failure::Associativity:
            failure["kind"] = "associativity";
            break;
        case qalg::ValidationReport::Failure::None: break;
    }
    failure["i"] = rep.i;
    failure["j"] = rep.j;
    failure["k"] = rep.k;
    failure["lhs"] = coords_json(rep.lhs);
    failure["rhs"] = coords_json(rep.rhs);
    failure["message"] = rep.message;
    out.report["failure"] = std::move(failure);
    out.say("validate: " + a->name() + " INVALID: " + rep.message);
    return 2;
}

// -------------------------------------------------------------------- lift

int cmd_lift(const std::string& path, const std::string& poly_text,
             const std::string& element_text, const std::string& ideal_text, Output& out) {
    std::string digest;
    AlgebraPtr a = load_algebra_checked(path, digest);
    out.report["command"] = "lift";
    out.report["file"] = path;
    out.report["digest"] = digest;

    qalg::ValidationReport vrep = qalg::validate(*a);
    if (!vrep.ok) {
        out.report["error"] = "invalid_presentation";
        out.report["message"] = vrep.message;
        out.say("lift: invalid presentation: " + vrep.message);
        return 2;
    }

    qalg::Poly f = qalg::parse_poly(poly_text);
    Element b = qalg::make_element(a, parse_coords(element_text, a->dim(), "--element"));
    Subspace ideal(a->dim());
    if (ideal_text == "rad") {
        ideal = qalg::radical(a).radical;
    } else {
        std::vector<Vec> rows;
        std::istringstream in(ideal_text);
        std::string part;
        while (std::getline(in, part, ';')) {
            rows.push_back(parse_coords(part, a->dim(), "--ideal"));
        }
        ideal = Subspace::span(a->dim(), rows);
    }
    out.report["poly"] = f.str();
    out.report["element"] = coords_json(b.coords);
    out.report["ideal"] = subspace_json(ideal);

    try {
        qalg::LiftResult lift = qalg::hensel_lift(a, ideal, b, f);
        out.report["lifted"] = coords_json(lift.lifted.coords);
        out.report["iterations"] = lift.iterations;
        out.report["residual_path"] = support_json(lift.residual_path);
        out.report["nilpotency"] = lift.nilpotency;
        ordered_json verified;
        verified["root"] = qalg::eval_poly(f, lift.lifted).is_zero();
        verified["congruent"] = ideal.contains((lift.lifted - b).coords);
        verified["commutes"] = lift.lifted * b == b * lift.lifted;
        out.report["verified"] = std::move(verified);
        std::ostringstream human;
        human << "lift: f = " << f.str() << " lifted in " << lift.iterations
              << " iteration(s); nilpotency " << lift.nilpotency;
        out.say(human.str());
        std::ostringstream coords;
        coords << "lift: a = (";
        for (std::size_t i = 0; i < lift.lifted.coords.size(); ++i) {
            if (i) coords << ", ";
            coords << lift.lifted.coords[i];
        }
        coords << ")";
        out.say(coords.str());
        return 0;
    } catch (const qalg::NotSeparableError& e) {
        out.report["error"] = "not_separable";
        out.report["gcd"] = e.common_factor().str();
        out.say("lift: not separable; gcd(f, f') = " + e.common_factor().str());
        return 4;
    } catch (const qalg::ResidueNotInIdealError& e) {
        out.report["error"] = "residue_not_in_ideal";
        out.report["residue"] = coords_json(e.residue().coords);
        out.say("lift: f(b) does not lie in the ideal");
        return 5;
    } catch (const qalg::NotNilpotentError& e) {
        out.report["error"] = "ideal_not_nilpotent";
        out.report["stabilized"] = subspace_json(e.stabilized());
        out.say("lift: the ideal is not nilpotent");
        return 5;
    } catch (const std::invalid_argument& e) {
        out.report["error"] = "precondition";
        out.report["message"] = e.what();
        out.say(std::string("lift: ") + e.what());
        return 5;
    }
}

// ---------------------------------------------------------------- classify

ordered_json complex_witness_json(const qalg::ComplexWitness& w) {
    ordered_json j;
    j["element"] = coords_json(w.element.coords);
    j["minimal_poly"] = w.minimal.str();
    j["sturm"] = ordered_json{{"variations_at_minus_inf", w.sturm.variations_at_minus_inf},
                              {"variations_at_plus_inf", w.sturm.variations_at_plus_inf},
                              {"distinct_real_roots", w.sturm.distinct_real_roots}};
    j["verified"] = w.verify();
    return j;
}

ordered_json quaternion_witness_json(const qalg::QuaternionWitness& w) {
    ordered_json j;
    j["a"] = coords_json(w.a.coords);
    j["b"] = coords_json(w.b.coords);
    j["lambda"] = w.lambda.str();
    j["mu"] = w.mu.str();
    j["verified"] = w.verify();
    return j;
}

ordered_json pair_json(const qalg::AnticommutingPair& p) {
    ordered_json j;
    j["u"] = coords_json(p.u.coords);
    j["v"] = coords_json(p.v.coords);
    j["u_inverse"] = coords_json(p.u_inverse.coords);
    j["v_inverse"] = coords_json(p.v_inverse.coords);
    j["verified"] = p.verify();
    return j;
}

ordered_json certificate_json(const qalg::IdealCertificate& c, const AlgebraPtr& a) {
    ordered_json j;
    j["obstruction"] = c.obstruction == qalg::IdealCertificate::Obstruction::OddDimension
                           ? "odd_dimension"
                           : "dimension_not_multiple_of_four";
    j["sidedness"] =
        c.sidedness == qalg::IdealCertificate::Sidedness::Left ? "left" : "two_sided";
    j["dim"] = c.ideal.dim();
    ordered_json gens = ordered_json::array();
    for (const Element& g : c.generators) gens.push_back(coords_json(g.coords));
    j["generators"] = std::move(gens);
    j["basis"] = subspace_json(c.ideal);
    j["verified"] = c.verify(a);
    return j;
}

int cmd_classify(const std::string& path, const std::string& property, std::size_t budget,
                 std::uint64_t seed, Output& out) {
    std::string digest;
    AlgebraPtr a = load_algebra_checked(path, digest);
    out.report["command"] = "classify";
    out.report["file"] = path;
    out.report["digest"] = digest;
    out.report["property"] = property;
    out.report["budget"] = budget;
    out.report["seed"] = seed;

    qalg::ValidationReport vrep = qalg::validate(*a);
    if (!vrep.ok) {
        out.report["error"] = "invalid_presentation";
        out.report["message"] = vrep.message;
        out.say("classify: invalid presentation: " + vrep.message);
        return 2;
    }
    qalg::SearchParams params{budget, seed};

    if (property == "frobenius") {
        qalg::FrobeniusResult r = qalg::frobenius_classify(a);
        switch (r.kind) {
            case qalg::FrobeniusResult::Kind::Real:
                out.report["kind"] = "real";
                out.say("classify: real (dimension 1)");
                return 0;
            case qalg::FrobeniusResult::Kind::Complex: {
                out.report["kind"] = "complex";
                out.report["lambda"] = r.lambda->str();
                out.report["i_element"] = coords_json(r.a->coords);
                bool ok = *(r.a) * *(r.a) ==
                          qalg::scalar_element(a, -(*r.lambda));
                out.report["verified"] = ok;
                out.say("classify: complex with lambda = " + r.lambda->str());
                return 0;
            }
            case qalg::FrobeniusResult::Kind::Quaternion: {
                out.report["kind"] = "quaternion";
                out.report["lambda"] = r.lambda->str();
                out.report["mu"] = r.mu->str();
                out.report["a"] = coords_json(r.a->coords);
                out.report["v"] = coords_json(r.v->coords);
                qalg::QuaternionWitness w{*r.a, *r.v, *r.lambda, *r.mu};
                out.report["verified"] = w.verify();
                out.say("classify: quaternion with lambda = " + r.lambda->str() +
                        ", mu = " + r.mu->str());
                return 0;
            }
            case qalg::FrobeniusResult::Kind::NotRealDivision: {
                out.report["kind"] = "not_real_division";
                ordered_json ev;
                ev["reason"] = r.evidence->reason;
                if (r.evidence->element) ev["element"] = coords_json(r.evidence->element->coords);
                if (r.evidence->minimal) ev["minimal_poly"] = r.evidence->minimal->str();
                if (r.evidence->sturm) {
                    ev["distinct_real_roots"] = r.evidence->sturm->distinct_real_roots;
                }
                if (r.evidence->dimension) ev["dimension"] = *r.evidence->dimension;
                out.report["evidence"] = std::move(ev);
                out.say("classify: not a real division presentation: " + r.evidence->reason);
                return 1;
            }
        }
        throw std::logic_error("classify: unreachable");
    }

    qalg::ClassifyOutcome first;
    std::optional<qalg::ClassifyOutcome> fallback;
    if (property == "complex") {
        first = qalg::find_complex_witness(a, params);
        if (first.status != qalg::ClassifyOutcome::Status::Witness) {
            fallback = qalg::find_odd_left_ideal_certificate(a, params);
        }
    } else if (property == "quaternion") {
        first = qalg::find_quaternion_witness(a, params);
        if (first.status != qalg::ClassifyOutcome::Status::Witness) {
            fallback = qalg::find_left_ideal_mod4_certificate(a, params);
        }
    } else if (property == "anticommuting") {
        first = qalg::find_anticommuting_pair(a, params);
    } else {
        throw UsageError("unknown property \"" + property +
                         "\" (expected complex, quaternion, anticommuting or frobenius)");
    }

    // The fallback only runs when the witness search came up empty, so if it
    // ran, its answer (certificate or unknown) is the decision.
    const qalg::ClassifyOutcome& decision = fallback ? *fallback : first;
    std::size_t total_used = first.budget_used + (fallback ? fallback->budget_used : 0);
    out.report["budget_used"] = total_used;

    switch (decision.status) {
        case qalg::ClassifyOutcome::Status::Witness:
            out.report["outcome"] = "witness";
            if (decision.complex_witness) {
                out.report["witness"] = complex_witness_json(*decision.complex_witness);
                out.say("classify: complex witness with minimal polynomial " +
                        decision.complex_witness->minimal.str());
            } else if (decision.quaternion_witness) {
                out.report["witness"] = quaternion_witness_json(*decision.quaternion_witness);
                out.say("classify: quaternion witness, lambda = " +
                        decision.quaternion_witness->lambda.str() +
                        ", mu = " + decision.quaternion_witness->mu.str());
            } else if (decision.pair) {
                out.report["witness"] = pair_json(*decision.pair);
                out.say("classify: anticommuting invertible pair found");
            }
            return 0;
        case qalg::ClassifyOutcome::Status::Certificate:
            out.report["outcome"] = "certificate";
            out.report["certificate"] = certificate_json(*decision.certificate, a);
            out.say("classify: certificate ideal of dimension " +
                    std::to_string(decision.certificate->ideal.dim()));
            return 1;
        case qalg::ClassifyOutcome::Status::Unknown:
            out.report["outcome"] = "unknown";
            out.say("classify: unknown (budget " + std::to_string(total_used) + " exhausted)");
            return 6;
    }
    throw std::logic_error("classify: unreachable");
}

// ----------------------------------------------------------------- catalog

int cmd_catalog(const std::vector<std::string>& tokens, Output& out) {
    std::string spec;
    std::string out_path;
    std::vector<std::string> params;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "--out") {
            if (i + 1 >= tokens.size()) throw UsageError("--out needs a path");
            out_path = tokens[++i];
        } else if (tokens[i] == "--json") {
            out.json = true;
        } else if (spec.empty()) {
            spec = tokens[i];
        } else {
            params.push_back(tokens[i]);
        }
    }
    if (spec.empty()) throw UsageError("catalog: missing construction name");
    if (!params.empty()) {
        spec += "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) spec += ",";
            spec += params[i];
        }
        spec += ")";
    }
    AlgebraPtr a;
    try {
        a = qalg::catalog(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out.report["command"] = "catalog";
    out.report["spec"] = spec;
    out.report["name"] = a->name();
    out.report["dim"] = a->dim();
    std::string body = qalg::algebra_to_json_string(*a) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("could not open \"" + out_path + "\" for writing");
        f << body;
        out.report["out"] = out_path;
    }
    out.report["digest"] = fnv1a64_hex(body);
    out.say("catalog: " + a->name() + " [dim " + std::to_string(a->dim()) + "]" +
            (out_path.empty() ? "" : " written to " + out_path));
    out.say("catalog: digest " + fnv1a64_hex(body));
    return 0;
}

// -------------------------------------------------------------------- demo

Element by_names(const AlgebraPtr& a, const std::vector<std::pair<std::string, Rational>>& terms) {
    Vec v(a->dim());
    for (const auto& [name, c] : terms) {
        bool found = false;
        for (std::size_t i = 0; i < a->dim(); ++i) {
            if (a->basis_names()[i] == name) {
                v[i] += c;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("demo: no basis element named " + name);
    }
    return qalg::make_element(a, std::move(v));
}

ordered_json lift_json(const qalg::LiftResult& lift) {
    ordered_json j;
    j["lifted"] = coords_json(lift.lifted.coords);
    j["iterations"] = lift.iterations;
    j["residual_path"] = support_json(lift.residual_path);
    j["nilpotency"] = lift.nilpotency;
    return j;
}

int demo_frobenius(Output& out, bool& all_verified) {
    ordered_json cases = ordered_json::array();
    struct Case {
        AlgebraPtr a;
        std::string expect;
        std::string expect_lambda;
    };
    std::vector<Case> todo;
    todo.push_back({qalg::scramble_basis(qalg::catalog_Q(), 101).algebra, "real", ""});
    for (long d : {1L, 2L, 7L}) {
        todo.push_back({qalg::scramble_basis(qalg::catalog_Cneg(Rational(-d)),
                                             200 + static_cast<std::uint64_t>(d))
                            .algebra,
                        "complex", Rational(d).str()});
    }
    todo.push_back({qalg::scramble_basis(qalg::catalog_Quat(Rational(-1), Rational(-1)), 301)
                        .algebra,
                    "quaternion", ""});
    todo.push_back({qalg::scramble_basis(qalg::catalog_Quat(Rational(-2), Rational(-3)), 302)
                        .algebra,
                    "quaternion", ""});
    todo.push_back({qalg::catalog_Cneg(Rational(2)), "not_real_division", ""});
    todo.push_back({qalg::matrix_algebra(qalg::catalog_Q(), 2), "not_real_division", ""});

    for (const Case& c : todo) {
        qalg::FrobeniusResult r = qalg::frobenius_classify(c.a);
        ordered_json row;
        row["input"] = c.a->name();
        std::string kind;
        bool verified = true;
        switch (r.kind) {
            case qalg::FrobeniusResult::Kind::Real: kind = "real"; break;
            case qalg::FrobeniusResult::Kind::Complex: {
                kind = "complex";
                row["lambda"] = r.lambda->str();
                row["i_element"] = coords_json(r.a->coords);
                verified = *(r.a) * *(r.a) == qalg::scalar_element(c.a, -(*r.lambda));
                if (!c.expect_lambda.empty()) verified &= r.lambda->str() == c.expect_lambda;
                break;
            }
            case qalg::FrobeniusResult::Kind::Quaternion: {
                kind = "quaternion";
                row["lambda"] = r.lambda->str();
                row["mu"] = r.mu->str();
                qalg::QuaternionWitness w{*r.a, *r.v, *r.lambda, *r.mu};
                verified = w.verify();
                break;
            }
            case qalg::FrobeniusResult::Kind::NotRealDivision:
                kind = "not_real_division";
                row["reason"] = r.evidence->reason;
                break;
        }
        row["kind"] = kind;
        verified &= kind == c.expect;
        row["verified"] = verified;
        all_verified &= verified;
        cases.push_back(std::move(row));
        out.say("frobenius: " + c.a->name() + " -> " + kind + (verified ? "" : " (MISMATCH)"));
    }
    out.report["cases"] = std::move(cases);
    return all_verified ? 0 : 1;
}

int demo_example_j(Output& out, bool& all_verified) {
    AlgebraPtr j = qalg::catalog_ExampleJ();
    out.report["dim"] = j->dim();
    bool valid = qalg::validate(*j).ok;
    all_verified &= valid;
    out.report["valid"] = valid;

    qalg::RadicalReport rad = qalg::radical(j);
    out.report["radical_dim"] = rad.radical.dim();
    out.report["radical_nilpotency"] = rad.nilpotency;
    out.report["radical_basis"] = subspace_json(rad.radical);
    all_verified &= rad.radical.dim() == 4 && rad.nilpotency == 2;

    // The quotient carries a genuine quaternion pair.
    qalg::QuotientResult q = qalg::quotient(j, rad.radical);
    Element xq = qalg::project_element(q, qalg::basis_element(j, 1));
    Element yq = qalg::project_element(q, qalg::basis_element(j, 2));
    qalg::QuaternionWitness quot_pair{xq, yq, Rational(1), Rational(1)};
    bool quot_ok = quot_pair.verify();
    out.report["quotient_dim"] = q.algebra->dim();
    out.report["quotient_pair_verified"] = quot_ok;
    all_verified &= quot_ok;

    // Inside the algebra itself: x together with (yx - xy)/2 = t/2 - z.
    Element x = by_names(j, {{"x", Rational(1)}});
    Element w = by_names(j, {{"t", Rational(1, 2)}, {"z", Rational(-1)}});
    qalg::QuaternionWitness inner_pair{x, w, Rational(1), Rational(1)};
    bool inner_ok = inner_pair.verify();
    out.report["complement_pair"] =
        ordered_json{{"a", coords_json(x.coords)}, {"b", coords_json(w.coords)},
                     {"lambda", "1"}, {"mu", "1"}, {"verified", inner_ok}};
    all_verified &= inner_ok;

    // Exact feasibility of correcting (x, y) to a quaternion pair inside the
    // radical.
    Element y = by_names(j, {{"y", Rational(1)}});
    qalg::QuaternionLiftFeasibility feas =
        qalg::quaternion_lift_feasibility(j, rad.radical, x, y);
    ordered_json fj;
    fj["feasible"] = feas.feasible;
    fj["system_rank"] = feas.system_rank;
    fj["augmented_rank"] = feas.augmented_rank;
    if (feas.feasible) {
        fj["correction_x"] = coords_json(feas.correction_x->coords);
        fj["correction_y"] = coords_json(feas.correction_y->coords);
        fj["a"] = coords_json(feas.a->coords);
        fj["b"] = coords_json(feas.b->coords);
        bool ok = *feas.a * *feas.a == qalg::scalar_element(j, Rational(-1)) &&
                  *feas.b * *feas.b == qalg::scalar_element(j, Rational(-1)) &&
                  qalg::anticommutator(*feas.a, *feas.b).is_zero() &&
                  rad.radical.contains((*feas.a - x).coords) &&
                  rad.radical.contains((*feas.b - y).coords);
        fj["identities_verified"] = ok;
        all_verified &= ok;
        fj["discrepancy_note"] =
            "an informal degree-count argument holds that no such corrections exist; "
            "the exact affine solve finds them and every identity above is re-verified, "
            "so that argument does not apply to this presentation";
    }
    out.report["feasibility"] = std::move(fj);

    out.say("example-j: dim 8, radical dim " + std::to_string(rad.radical.dim()) +
            " (nilpotency " + std::to_string(rad.nilpotency) + ")");
    out.say("example-j: quotient pair verified: " + std::string(quot_ok ? "yes" : "NO"));
    out.say("example-j: complement pair verified: " + std::string(inner_ok ? "yes" : "NO"));
    out.say("example-j: quaternion corrections inside the radical: " +
            std::string(feas.feasible ? "feasible (verified exactly)" : "infeasible"));
    return all_verified ? 0 : 1;
}

int demo_inseparable(Output& out, bool& all_verified) {
    ordered_json cases = ordered_json::array();
    for (const char* text : {"(X-1)^2", "X^2*(X-1)", "(X-1)^2*(X+2)"}) {
        qalg::Poly f = qalg::parse_poly(text);
        Rational root = text[0] == 'X' ? Rational(0) : Rational(1);
        qalg::NoLiftWitness w = qalg::inseparable_witness(f, root);
        ordered_json row;
        row["poly"] = f.str();
        row["root"] = root.str();
        row["ambient"] = w.algebra->name();
        row["element"] = coords_json(w.element.coords);
        row["residue"] = coords_json(w.residue.coords);
        bool ok = w.verify();
        row["witness_verified"] = ok;
        bool rejected = false;
        std::string gcd;
        try {
            qalg::hensel_lift(w.algebra, w.ideal, w.element, f);
        } catch (const qalg::NotSeparableError& e) {
            rejected = true;
            gcd = e.common_factor().str();
        }
        row["hensel_rejects"] = rejected;
        row["gcd"] = gcd;
        ok &= rejected;
        all_verified &= ok;
        cases.push_back(std::move(row));
        out.say(std::string("inseparable: ") + text + " -> residue fixed, hensel " +
                (rejected ? "rejects (gcd " + gcd + ")" : "DID NOT REJECT"));
    }
    out.report["cases"] = std::move(cases);
    return all_verified ? 0 : 1;
}

int demo_mth_root(Output& out, bool& all_verified) {
    ordered_json cases = ordered_json::array();
    {
        AlgebraPtr a = qalg::truncated_polynomial_algebra(3);
        Subspace ideal = qalg::left_ideal_span(a, {qalg::basis_element(a, 1)});
        Element b = qalg::unit_element(a) + qalg::basis_element(a, 1);
        Element root = qalg::lift_mth_root(a, ideal, b, 2, Rational(1));
        bool ok = qalg::pow_element(root, 2) == qalg::scalar_element(a, Rational(1)) &&
                  ideal.contains((root - b).coords);
        ordered_json row;
        row["algebra"] = a->name();
        row["m"] = 2;
        row["beta"] = "1";
        row["b"] = coords_json(b.coords);
        row["a"] = coords_json(root.coords);
        row["verified"] = ok;
        all_verified &= ok;
        cases.push_back(std::move(row));
        out.say("mth-root: " + a->name() + ", b = 1 + eps, m = 2 -> a with a^2 = 1: " +
                (ok ? "verified" : "FAILED"));
    }
    {
        AlgebraPtr a = qalg::tensor_product(qalg::catalog_Cneg(Rational(-1)),
                                            qalg::truncated_polynomial_algebra(2));
        Element eps = by_names(a, {{"eps", Rational(1)}});
        Subspace ideal = qalg::two_sided_ideal_span(a, {eps});
        Element b = by_names(a, {{"u", Rational(1)}, {"eps", Rational(1)}});
        Element root = qalg::lift_mth_root(a, ideal, b, 2, Rational(-1));
        bool ok = qalg::pow_element(root, 2) == qalg::scalar_element(a, Rational(-1)) &&
                  ideal.contains((root - b).coords);
        ordered_json row;
        row["algebra"] = a->name();
        row["m"] = 2;
        row["beta"] = "-1";
        row["b"] = coords_json(b.coords);
        row["a"] = coords_json(root.coords);
        row["verified"] = ok;
        all_verified &= ok;
        cases.push_back(std::move(row));
        out.say("mth-root: " + a->name() + ", b = u + eps, m = 2, beta = -1: " +
                (ok ? "verified" : "FAILED"));
    }
    out.report["cases"] = std::move(cases);
    return all_verified ? 0 : 1;
}

int demo_idempotent(Output& out, bool& all_verified) {
    AlgebraPtr a = qalg::catalog_Tri(4);
    Subspace rad = qalg::radical(a).radical;
    ordered_json cases = ordered_json::array();

    auto run = [&](Element b, const std::string& label) {
        qalg::LiftResult lift = qalg::lift_idempotent(a, rad, b);
        // Independent closed form: the Newton step for X^2 - X is
        // c <- 3c^2 - 2c^3.
        Element c = b;
        bool matches = c == lift.iterates[0];
        for (std::size_t s = 1; s < lift.iterates.size(); ++s) {
            Element c2 = c * c;
            c = Rational(3) * c2 - Rational(2) * (c2 * c);
            matches &= c == lift.iterates[s];
        }
        Element e = lift.lifted;
        bool ok = matches && e * e == e && rad.contains((e - b).coords);
        ordered_json row = lift_json(lift);
        row["input"] = coords_json(b.coords);
        row["label"] = label;
        row["closed_form_matches"] = matches;
        row["verified"] = ok;
        all_verified &= ok;
        cases.push_back(std::move(row));
        out.say("idempotent: " + label + " -> " + std::to_string(lift.iterations) +
                " iteration(s), " + (ok ? "verified" : "FAILED"));
    };

    run(qalg::unit_element(a) +
            by_names(a, {{"e12", Rational(1)}, {"e23", Rational(1)}, {"e34", Rational(1)}}),
        "1 + e12 + e23 + e34");
    run(by_names(a, {{"e11", Rational(1)},
                     {"e12", Rational(1)},
                     {"e13", Rational(1)},
                     {"e14", Rational(1)}}),
        "e11 + e12 + e13 + e14 (already idempotent)");
    out.report["cases"] = std::move(cases);
    return all_verified ? 0 : 1;
}

int demo_corollary_nil_codim(Output& out, bool& all_verified) {
    // Upper triangular 3x3 matrices over Cneg(-1); the strict upper part is a
    // nil ideal of codimension 6 and the scalar u + e12 lifts to a square
    // root of -1.
    AlgebraPtr a = qalg::tensor_product(qalg::catalog_Tri(3), qalg::catalog_Cneg(Rational(-1)));
    Subspace ideal = qalg::two_sided_ideal_span(
        a, {by_names(a, {{"e12", Rational(1)}}), by_names(a, {{"e23", Rational(1)}})});
    Element b = by_names(a, {{"e11*u", Rational(1)},
                             {"e22*u", Rational(1)},
                             {"e33*u", Rational(1)},
                             {"e12", Rational(1)}});
    qalg::Poly f = qalg::parse_poly("X^2 + 1");
    qalg::LiftResult lift = qalg::hensel_lift(a, ideal, b, f);
    bool ok = qalg::pow_element(lift.lifted, 2) == qalg::scalar_element(a, Rational(-1)) &&
              ideal.contains((lift.lifted - b).coords);
    all_verified &= ok;
    out.report["algebra"] = a->name();
    out.report["ideal_dim"] = ideal.dim();
    out.report["b"] = coords_json(b.coords);
    out.report["lift"] = lift_json(lift);
    out.report["verified"] = ok;
    out.say("corollary-nil-codim: " + a->name() + ", nil ideal dim " +
            std::to_string(ideal.dim()) + ", lift of X^2 + 1 in " +
            std::to_string(lift.iterations) + " iteration(s): " +
            (ok ? "a^2 = -1 verified" : "FAILED"));
    return all_verified ? 0 : 1;
}

int cmd_demo(const std::string& name, Output& out) {
    out.report["command"] = "demo";
    out.report["name"] = name;
    bool all_verified = true;
    int rc;
    if (name == "frobenius") {
        rc = demo_frobenius(out, all_verified);
    } else if (name == "example-j") {
        rc = demo_example_j(out, all_verified);
    } else if (name == "inseparable") {
        rc = demo_inseparable(out, all_verified);
    } else if (name == "mth-root") {
        rc = demo_mth_root(out, all_verified);
    } else if (name == "idempotent") {
        rc = demo_idempotent(out, all_verified);
    } else if (name == "corollary-nil-codim") {
        rc = demo_corollary_nil_codim(out, all_verified);
    } else {
        throw UsageError("unknown demo \"" + name +
                         "\" (expected frobenius, example-j, inseparable, mth-root, "
                         "idempotent or corollary-nil-codim)");
    }
    out.report["all_verified"] = all_verified;
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant algebra toolkit"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit a JSON report on stdout");

    std::string val_path;
    CLI::App* validate = app.add_subcommand("validate", "check a presentation file");
    validate->fallthrough();
    validate->add_option("file", val_path, "algebra JSON file")->required();

    std::string lift_path, lift_poly, lift_element, lift_ideal = "rad";
    CLI::App* lift = app.add_subcommand("lift", "lift a root along a nilpotent ideal");
    lift->fallthrough();
    lift->add_option("file", lift_path, "algebra JSON file")->required();
    lift->add_option("--poly", lift_poly, "polynomial, e.g. \"X^2 - X\"")->required();
    lift->add_option("--element", lift_element, "comma-separated rational coordinates")
        ->required();
    lift->add_option("--ideal", lift_ideal,
                     "\"rad\" or semicolon-separated coordinate rows (default rad)");

    std::string cls_path, cls_property;
    std::size_t cls_budget = 500;
    std::uint64_t cls_seed = 0;
    CLI::App* classify = app.add_subcommand("classify", "search for witnesses or certificates");
    classify->fallthrough();
    classify->add_option("file", cls_path, "algebra JSON file")->required();
    classify->add_option("--property", cls_property,
                         "complex | quaternion | anticommuting | frobenius")
        ->required();
    classify->add_option("--budget", cls_budget, "candidate budget (default 500)");
    classify->add_option("--seed", cls_seed, "search seed (default 0)");

    std::string demo_name;
    CLI::App* demo = app.add_subcommand("demo", "replay a worked construction");
    demo->fallthrough();
    demo->add_option("name", demo_name, "demo name")->required();

    CLI::App* cat = app.add_subcommand("catalog", "write a built-in presentation to a file");
    cat->prefix_command();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.json = json_mode;
    auto start = std::chrono::steady_clock::now();
    int rc = 0;
    std::string failed_command = "qalg";
    try {
        if (validate->parsed()) {
            failed_command = "validate";
            rc = cmd_validate(val_path, out);
        } else if (lift->parsed()) {
            failed_command = "lift";
            rc = cmd_lift(lift_path, lift_poly, lift_element, lift_ideal, out);
        } else if (classify->parsed()) {
            failed_command = "classify";
            rc = cmd_classify(cls_path, cls_property, cls_budget, cls_seed, out);
        } else if (demo->parsed()) {
            failed_command = "demo";
            rc = cmd_demo(demo_name, out);
        } else if (cat->parsed()) {
            failed_command = "catalog";
            rc = cmd_catalog(cat->remaining(), out);
        }
    } catch (const UsageError& e) {
        std::cerr << "qalg " << failed_command << ": " << e.what() << "\n";
        return 3;
    } catch (const qalg::AlgebraParseError& e) {
        std::cerr << "qalg " << failed_command << ": " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qalg " << failed_command << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "qalg " << failed_command << ": internal error: " << e.what() << "\n";
        return 1;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    out.flush();
    std::cerr << "qalg: " << failed_command << " finished in " << elapsed << " ms\n";
    return rc;
}
