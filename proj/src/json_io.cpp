#include "opdc/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "opdc/errors.hpp"

namespace opdc::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

std::vector<Rational> rationals_from_json(const json& j) {
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(Rational::parse(item.get<std::string>()));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& comma_separated) {
    std::vector<Rational> out;
    std::stringstream ss(comma_separated);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) out.push_back(Rational::parse(token));
    }
    return out;
}

json to_json(const ThreeTermRecurrence& rec) {
    json j;
    j["b"] = rationals_to_json(rec.b);
    j["u"] = rationals_to_json(rec.u);
    if (rec.ac) {
        json ac;
        ac["A"] = rationals_to_json(rec.ac->A);
        ac["C"] = rationals_to_json(rec.ac->C);
        ac["theta"] = rec.ac->theta.str();
        j["AC"] = std::move(ac);
    } else {
        j["AC"] = nullptr;
    }
    return j;
}

json to_json(const PencilRecurrence& rec) {
    json j;
    j["lambda"] = rec.lambda.str();
    j["b"] = rationals_to_json(rec.b);
    j["u"] = rationals_to_json(rec.u);
    return j;
}

json to_json(const TridiagonalMatrix& t) {
    json j;
    j["n"] = t.n;
    json diag = json::array(), super = json::array(), sub = json::array();
    for (int i = 0; i < t.n; ++i) diag.push_back(t.diag(i));
    for (int i = 0; i + 1 < t.n; ++i) {
        super.push_back(t.super(i));
        sub.push_back(t.sub(i));
    }
    j["diag"] = std::move(diag);
    j["super"] = std::move(super);
    j["sub"] = std::move(sub);
    j["interior_margin"] = t.interior_margin;
    return j;
}

json dense_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SzegoPair& pair) {
    json j;
    j["n"] = pair.n;
    j["phi"] = rationals_to_json(pair.phi.coeffs());
    j["phi_star"] = rationals_to_json(pair.phi_star.coeffs());
    return j;
}

json to_json(const Classification& c) {
    json j;
    j["epsilon"] = c.epsilon;
    j["rsq"] = rationals_to_json(c.rsq);
    j["classical"] = c.classical;
    j["degenerate"] = c.degenerate;
    return j;
}

json to_json(const BISeed& seed) {
    json j;
    j["a0"] = seed.a0.str();
    j["lambda0"] = seed.lambda0.str();
    j["lambda_bi"] = seed.lambda_bi.str();
    j["sqrt_lambda_bi"] = seed.sqrt_lambda_bi.str();
    return j;
}

json to_json(const IdentityCheck& check) {
    json j;
    j["identity"] = check.name;
    j["n"] = check.n;
    j["interior"] = check.interior;
    j["max_residual"] = check.max_residual;
    j["pass"] = check.pass;
    j["tolerance"] = check.tolerance;
    j["informational"] = check.informational;
    if (!check.note.empty()) j["note"] = check.note;
    return j;
}

json to_json(const IdentityReport& report) {
    json j;
    j["convention"] = report.convention;
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    j["all_pass"] = report.all_pass;
    if (report.grid_fit) {
        json g;
        g["even_offset"] = report.grid_fit->even_offset;
        g["even_step"] = report.grid_fit->even_step;
        g["odd_offset"] = report.grid_fit->odd_offset;
        g["odd_step"] = report.grid_fit->odd_step;
        g["rms_residual"] = report.grid_fit->rms_residual;
        g["max_imag"] = report.grid_fit->max_imag;
        j["grid_fit"] = std::move(g);
    }
    return j;
}

json to_json(const SuiteResult& result) {
    json j;
    j["suite"] = result.name;
    j["trials"] = result.trials;
    j["pass"] = result.pass;
    j["detail"] = result.detail;
    return j;
}

json to_json(const ChainStepReport& report) {
    json j;
    json sols = json::array();
    for (const auto& s : report.solutions) {
        json e;
        e["lambda_t"] = s.lambda_t;
        e["x_t"] = s.x_t;
        e["r"] = {s.r0, s.r1, s.r2};
        e["s"] = {s.s0, s.s1, s.s2};
        e["residual"] = s.residual;
        e["trivial"] = s.trivial;
        sols.push_back(std::move(e));
    }
    j["solutions"] = std::move(sols);
    j["quadratic_discriminant"] = report.quad_disc;
    j["quadratic_roots"] = report.quad_roots;
    return j;
}

json to_json(const QuadAlgebraReport& report) {
    json j;
    json sols = json::array();
    for (const auto& s : report.solutions) {
        json e;
        e["xi"] = {s.xi1, s.xi2, s.xi3, s.xi4};
        e["eta"] = {s.eta1, s.eta2};
        e["zeta"] = s.zeta;
        e["residual"] = s.residual;
        sols.push_back(std::move(e));
    }
    j["solutions"] = std::move(sols);
    j["singular_values"] = report.singular_values;
    j["threshold"] = report.threshold;
    return j;
}

json reflection_to_json(const ReflectionSequence& seq, int prefix_len) {
    json j;
    json arr = json::array();
    for (int k = 0; k < prefix_len; ++k) arr.push_back(seq.a(k).str());
    j["a"] = std::move(arr);
    if (seq.is_list()) {
        j["generator"] = nullptr;
    } else {
        json gen{{"family", seq.name()}};
        if (!seq.metadata().empty()) gen["params"] = json::parse(seq.metadata());
        j["generator"] = std::move(gen);
    }
    return j;
}

ReflectionSequence reflection_from_json(const json& j) {
    if (j.contains("generator") && !j["generator"].is_null() && j["generator"].contains("params")) {
        const json& gen = j["generator"];
        std::string family = gen.at("family").get<std::string>();
        const json& params = gen.at("params");
        std::string metadata = params.dump();
        auto rat = [&params](const char* key) { return Rational::parse(params.at(key).get<std::string>()); };
        if (family == "bannai-ito") {
            BIParameters p{rat("rho1"), rat("rho2"), rat("r1"), rat("r2")};
            return ReflectionSequence::from_generator(bi_reflection_generator(p), family, metadata);
        }
        if (family == "bannai-ito-q") {
            BIParameters p{rat("rho1"), rat("rho2"), rat("r1"), rat("r2")};
            return ReflectionSequence::from_generator(bi_q_reflection_generator(p), family, metadata);
        }
        if (family == "racah-wilson") {
            RWParameters p{rat("beta1"), rat("beta2"), rat("beta3"), rat("beta4")};
            return ReflectionSequence::from_generator(rw_reflection_generator(p), family, metadata);
        }
        throw ParseError("unknown generator family '" + family + "'");
    }
    return ReflectionSequence::from_list(rationals_from_json(j.at("a")));
}

std::string csv_spectrum(const std::vector<double>& eigenvalues) {
    std::string out;
    for (double v : eigenvalues) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

} // namespace opdc::io
