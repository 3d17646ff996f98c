/*
 * Copyright 2026 The plfrac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "plfrac/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "plfrac/errors.hpp"

namespace plfrac {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        fail(where + " must be a JSON object");
    }
}

void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail("unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

double get_number(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key)) {
        fail(where + " is missing required key \"" + key + "\"");
    }
    const json& v = j.at(key);
    if (!v.is_number()) {
        fail(where + "." + key + " must be a number");
    }
    return v.get<double>();
}

double get_number_or(const json& j, const std::string& where, const char* key,
                     double fallback) {
    return j.contains(key) ? get_number(j, where, key) : fallback;
}

std::string get_string(const json& j, const std::string& where, const char* key) {
    const json& v = j.at(key);
    if (!v.is_string()) {
        fail(where + "." + key + " must be a string");
    }
    return v.get<std::string>();
}

std::vector<double> get_number_array(const json& j, const std::string& where,
                                     const char* key) {
    if (!j.contains(key)) {
        fail(where + " is missing required key \"" + key + "\"");
    }
    const json& v = j.at(key);
    if (!v.is_array() || v.empty()) {
        fail(where + "." + key + " must be a nonempty array of numbers");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number()) {
            fail(where + "." + key + " must contain only numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

ScalarDesc parse_scalar(const json& j, const std::string& where) {
    require_object(j, where);
    if (!j.contains("kind")) {
        fail(where + " is missing required key \"kind\"");
    }
    const std::string kind = get_string(j, where, "kind");
    ScalarDesc d;
    if (kind == "constant") {
        reject_unknown_keys(j, where, {"kind", "value"});
        d = ScalarDesc::constant(get_number(j, where, "value"));
    } else if (kind == "exponential") {
        reject_unknown_keys(j, where, {"kind", "value", "rate"});
        d = ScalarDesc::exponential(get_number(j, where, "value"),
                                    get_number(j, where, "rate"));
    } else if (kind == "indicator") {
        reject_unknown_keys(j, where, {"kind", "value", "cutoff"});
        d = ScalarDesc::indicator(get_number(j, where, "value"),
                                  get_number(j, where, "cutoff"));
    } else if (kind == "weighted") {
        reject_unknown_keys(j, where, {"kind", "value"});
        d = ScalarDesc::weighted(get_number(j, where, "value"));
    } else {
        fail(where + ".kind \"" + kind +
             "\" is not one of constant/exponential/indicator/weighted");
    }
    return d;
}

json scalar_to_json(const ScalarDesc& d) {
    json j;
    switch (d.kind) {
    case ScalarDesc::Kind::Constant:
        j["kind"] = "constant";
        j["value"] = d.value;
        break;
    case ScalarDesc::Kind::Exponential:
        j["kind"] = "exponential";
        j["value"] = d.value;
        j["rate"] = d.rate;
        break;
    case ScalarDesc::Kind::Indicator:
        j["kind"] = "indicator";
        j["value"] = d.value;
        j["cutoff"] = d.cutoff;
        break;
    case ScalarDesc::Kind::Weighted:
        j["kind"] = "weighted";
        j["value"] = d.value;
        break;
    }
    return j;
}

NonlinearityDesc parse_nonlinearity(const json& j, const std::string& where) {
    require_object(j, where);
    if (!j.contains("kind")) {
        fail(where + " is missing required key \"kind\"");
    }
    const std::string kind = get_string(j, where, "kind");
    if (kind == "constant") {
        reject_unknown_keys(j, where, {"kind", "value"});
        return NonlinearityDesc::constant(get_number(j, where, "value"));
    }
    if (kind == "affine") {
        reject_unknown_keys(j, where, {"kind", "c0", "c1", "c2"});
        for (const char* k : {"c0", "c1", "c2"}) {
            if (!j.contains(k)) {
                fail(where + " (affine) is missing required key \"" +
                     std::string(k) + "\"");
            }
        }
        return NonlinearityDesc::affine(parse_scalar(j.at("c0"), where + ".c0"),
                                        parse_scalar(j.at("c1"), where + ".c1"),
                                        parse_scalar(j.at("c2"), where + ".c2"));
    }
    if (kind == "example41") {
        reject_unknown_keys(j, where, {"kind"});
        return NonlinearityDesc::example41();
    }
    fail(where + ".kind \"" + kind +
         "\" is not one of constant/affine/example41");
}

json nonlinearity_to_json(const NonlinearityDesc& d) {
    json j;
    switch (d.kind) {
    case NonlinearityDesc::Kind::Constant:
        j["kind"] = "constant";
        j["value"] = d.value;
        break;
    case NonlinearityDesc::Kind::Affine:
        j["kind"] = "affine";
        j["c0"] = scalar_to_json(d.c0);
        j["c1"] = scalar_to_json(d.c1);
        j["c2"] = scalar_to_json(d.c2);
        break;
    case NonlinearityDesc::Kind::Example41:
        j["kind"] = "example41";
        break;
    }
    return j;
}

BDeltaDesc parse_b_delta(const json& j, const std::string& where) {
    require_object(j, where);
    if (!j.contains("kind")) {
        fail(where + " is missing required key \"kind\"");
    }
    const std::string kind = get_string(j, where, "kind");
    BDeltaDesc d;
    if (kind == "none") {
        reject_unknown_keys(j, where, {"kind"});
        d.kind = BDeltaDesc::Kind::None;
    } else if (kind == "constant") {
        reject_unknown_keys(j, where, {"kind", "value"});
        d.kind = BDeltaDesc::Kind::Constant;
        d.value = get_number(j, where, "value");
    } else if (kind == "linear") {
        reject_unknown_keys(j, where, {"kind", "intercept", "slope"});
        d.kind = BDeltaDesc::Kind::Linear;
        d.intercept = get_number(j, where, "intercept");
        d.slope = get_number(j, where, "slope");
    } else if (kind == "example41") {
        reject_unknown_keys(j, where, {"kind"});
        d.kind = BDeltaDesc::Kind::Example41;
    } else {
        fail(where + ".kind \"" + kind +
             "\" is not one of none/constant/linear/example41");
    }
    return d;
}

json b_delta_to_json(const BDeltaDesc& d) {
    json j;
    switch (d.kind) {
    case BDeltaDesc::Kind::None:
        j["kind"] = "none";
        break;
    case BDeltaDesc::Kind::Constant:
        j["kind"] = "constant";
        j["value"] = d.value;
        break;
    case BDeltaDesc::Kind::Linear:
        j["kind"] = "linear";
        j["intercept"] = d.intercept;
        j["slope"] = d.slope;
        break;
    case BDeltaDesc::Kind::Example41:
        j["kind"] = "example41";
        break;
    }
    return j;
}

ProblemSpec parse_problem(const json& j) {
    const std::string where = "problem";
    require_object(j, where);
    reject_unknown_keys(j, where,
                        {"alpha", "beta", "gamma", "p", "etas", "xis", "a", "f",
                         "b_delta", "attested_J"});
    ProblemSpec spec;
    spec.alpha = get_number(j, where, "alpha");
    spec.beta = get_number(j, where, "beta");
    spec.gamma_ord = get_number(j, where, "gamma");
    spec.p = get_number(j, where, "p");
    spec.etas = get_number_array(j, where, "etas");
    spec.xis = get_number_array(j, where, "xis");
    if (!j.contains("a")) {
        fail("problem is missing required key \"a\"");
    }
    spec.a = parse_scalar(j.at("a"), "problem.a");
    if (!j.contains("f")) {
        fail("problem is missing required key \"f\"");
    }
    spec.f = parse_nonlinearity(j.at("f"), "problem.f");
    if (j.contains("b_delta")) {
        spec.f_weighted_bound = parse_b_delta(j.at("b_delta"), "problem.b_delta");
    }
    if (j.contains("attested_J")) {
        spec.attested_J = get_number(j, where, "attested_J");
    }
    spec.validate();
    return spec;
}

GridConfig parse_grid(const json& j) {
    const std::string where = "grid";
    require_object(j, where);
    reject_unknown_keys(j, where, {"S_max", "N", "grading"});
    GridConfig g;
    g.s_max = get_number_or(j, where, "S_max", g.s_max);
    if (j.contains("N")) {
        const json& v = j.at("N");
        if (!v.is_number_integer() || v.get<long long>() < 1) {
            fail("grid.N must be a positive integer");
        }
        g.n = static_cast<std::size_t>(v.get<long long>());
    }
    g.grading = get_number_or(j, where, "grading", g.grading);
    return g;
}

SolverSettings parse_solver(const json& j) {
    const std::string where = "solver";
    require_object(j, where);
    reject_unknown_keys(j, where, {"omega", "tol", "max_iter"});
    SolverSettings s;
    s.omega = get_number_or(j, where, "omega", s.omega);
    s.tol = get_number_or(j, where, "tol", s.tol);
    if (j.contains("max_iter")) {
        const json& v = j.at("max_iter");
        if (!v.is_number_integer() || v.get<long long>() < 1) {
            fail("solver.max_iter must be a positive integer");
        }
        s.max_iter = static_cast<int>(v.get<long long>());
    }
    return s;
}

OutputConfig parse_outputs(const json& j) {
    const std::string where = "outputs";
    require_object(j, where);
    reject_unknown_keys(j, where, {"csv_path", "report_path"});
    OutputConfig o;
    if (j.contains("csv_path")) {
        o.csv_path = get_string(j, where, "csv_path");
    }
    if (j.contains("report_path")) {
        o.report_path = get_string(j, where, "report_path");
    }
    return o;
}

} // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    require_object(j, "config");
    reject_unknown_keys(j, "config",
                        {"problem", "grid", "solver", "delta", "outputs"});
    if (!j.contains("problem")) {
        fail("config is missing required key \"problem\"");
    }
    RunConfig cfg;
    cfg.problem = parse_problem(j.at("problem"));
    if (j.contains("grid")) {
        cfg.grid = parse_grid(j.at("grid"));
    }
    if (j.contains("solver")) {
        cfg.solver = parse_solver(j.at("solver"));
    }
    if (j.contains("delta")) {
        const double d = get_number(j, "config", "delta");
        if (!(d > 0.0)) {
            fail("delta must be positive");
        }
        cfg.delta = d;
    }
    if (j.contains("outputs")) {
        cfg.outputs = parse_outputs(j.at("outputs"));
    }
    // Surface grid/solver range problems at parse time.
    try {
        make_grid(cfg.grid);
    } catch (const std::exception& e) {
        fail(std::string("grid: ") + e.what());
    }
    SolverSettings s = cfg.solver;
    if (!(s.omega > 0.0) || !(s.omega <= 1.0)) {
        fail("solver.omega must lie in (0, 1]");
    }
    if (!(s.tol > 0.0)) {
        fail("solver.tol must be positive");
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    json problem;
    problem["alpha"] = cfg.problem.alpha;
    problem["beta"] = cfg.problem.beta;
    problem["gamma"] = cfg.problem.gamma_ord;
    problem["p"] = cfg.problem.p;
    problem["etas"] = cfg.problem.etas;
    problem["xis"] = cfg.problem.xis;
    problem["a"] = scalar_to_json(cfg.problem.a);
    problem["f"] = nonlinearity_to_json(cfg.problem.f);
    if (cfg.problem.f_weighted_bound.attested()) {
        problem["b_delta"] = b_delta_to_json(cfg.problem.f_weighted_bound);
    }
    if (cfg.problem.attested_J) {
        problem["attested_J"] = *cfg.problem.attested_J;
    }

    json j;
    j["problem"] = std::move(problem);
    j["grid"] = {{"S_max", cfg.grid.s_max},
                 {"N", cfg.grid.n},
                 {"grading", cfg.grid.grading}};
    j["solver"] = {{"omega", cfg.solver.omega},
                   {"tol", cfg.solver.tol},
                   {"max_iter", cfg.solver.max_iter}};
    if (cfg.delta) {
        j["delta"] = *cfg.delta;
    }
    json outputs = json::object();
    if (!cfg.outputs.csv_path.empty()) {
        outputs["csv_path"] = cfg.outputs.csv_path;
    }
    if (!cfg.outputs.report_path.empty()) {
        outputs["report_path"] = cfg.outputs.report_path;
    }
    if (!outputs.empty()) {
        j["outputs"] = std::move(outputs);
    }
    return j.dump(2) + "\n";
}

GridPtr make_grid(const GridConfig& cfg) {
    return Grid::graded(cfg.s_max, cfg.n, cfg.grading);
}

} // namespace plfrac
