#include "pade/json_io.hpp"

namespace pade {

namespace {

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& item : j) {
        auto r = Rational::parse(item.get<std::string>());
        if (!r) throw std::invalid_argument("bad rational string: " + item.get<std::string>());
        coeffs.push_back(*r);
    }
    return Poly::from_coefficients(std::move(coeffs));
}

json factored_to_json(const FactoredInt& f) {
    json factors = json::array();
    for (auto [p, e] : f.factors) factors.push_back({{"prime", p}, {"exponent", e}});
    return {{"value", f.value.get_str()}, {"factorization", factors}};
}

} // namespace

json interval_to_json(const RatInterval& x) { return json::array({x.lo.str(), x.hi.str()}); }

json tristate_to_json(Tristate t) {
    switch (t) {
        case Tristate::yes: return "pass";
        case Tristate::no: return "fail";
        default: return "undecided";
    }
}

json to_json(const QuadraticInt& z) {
    return {{"d", z.d()}, {"x", z.x().get_str()}, {"y", z.y().get_str()}, {"half_basis", z.half_basis()}};
}

json to_json(const LambdaConfig& cfg) {
    json lambdas = json::array();
    for (const Rational& l : cfg.lambdas) lambdas.push_back(l.str());
    return {{"lambdas", lambdas},
            {"R", cfg.R.get_str()},
            {"S", cfg.S.get_str()},
            {"Rhat", cfg.Rhat.get_str()},
            {"Shat", cfg.Shat.get_str()}};
}

json to_json(const PadeSystem& sys) {
    json lambdas = json::array();
    for (const Rational& l : sys.config.lambdas) lambdas.push_back(l.str());
    json degrees = json::array();
    for (unsigned v : sys.degrees.n) degrees.push_back(v);
    json rows = json::array();
    for (const PadeRow& row : sys.rows) {
        json ps = json::array();
        for (const Poly& p : row.P) ps.push_back(poly_to_json(p));
        rows.push_back({{"Q", poly_to_json(row.Q)}, {"P", ps}});
    }
    return {{"schema", 1}, {"lambdas", lambdas}, {"n", degrees}, {"rows", rows}, {"source", source_name(sys.source)}};
}

PadeSystem system_from_json(const json& j) {
    std::vector<Rational> lambdas;
    for (const auto& item : j.at("lambdas")) {
        auto r = Rational::parse(item.get<std::string>());
        if (!r) throw std::invalid_argument("bad rational string: " + item.get<std::string>());
        lambdas.push_back(*r);
    }
    PadeSystem sys;
    sys.config = validate_config(std::move(lambdas));
    std::vector<unsigned> n;
    for (const auto& item : j.at("n")) n.push_back(item.get<unsigned>());
    sys.degrees = DegreeVector::of(std::move(n));
    sys.source = j.value("source", "explicit") == "oracle" ? Source::oracle : Source::explicit_formula;
    for (const auto& row : j.at("rows")) {
        PadeRow r;
        r.Q = poly_from_json(row.at("Q"));
        for (const auto& p : row.at("P")) r.P.push_back(poly_from_json(p));
        sys.rows.push_back(std::move(r));
    }
    if (sys.rows.size() != static_cast<size_t>(sys.config.m()) + 1)
        throw std::invalid_argument("system document: row count mismatch");
    for (const PadeRow& r : sys.rows)
        if (r.P.size() != static_cast<size_t>(sys.config.m()))
            throw std::invalid_argument("system document: column count mismatch");
    return sys;
}

json to_json(const Verdict& v) {
    return {{"check", v.check}, {"status", tristate_to_json(v.status)}, {"detail", v.detail}};
}

json to_json(const Certificate& cert, const PadeSystem& sys, const QuadraticInt& a, const QuadraticInt& b) {
    json checks = json::array();
    auto push_all = [&checks](const std::vector<Verdict>& vs) {
        for (const auto& v : vs) checks.push_back(to_json(v));
    };
    push_all(cert.orders);
    checks.push_back(json{{"check", "determinant-collapse"},
                          {"status", cert.determinant.pass ? "pass" : "fail"},
                          {"detail", cert.determinant.detail},
                          {"leading", cert.determinant.expected_leading.str()},
                          {"degree", cert.determinant.expected_degree}});
    push_all(cert.integrality);
    push_all(cert.size_bounds);
    push_all(cert.remainder_bounds);
    push_all(cert.membership);

    return {{"schema", 1},
            {"system", to_json(sys)},
            {"alpha_num", to_json(a)},
            {"alpha_den", to_json(b)},
            {"denominators",
             {{"D1", factored_to_json(cert.denominators.D1)},
              {"D2", factored_to_json(cert.denominators.D2)},
              {"D1star", factored_to_json(cert.denominators.D1star)},
              {"D2star", factored_to_json(cert.denominators.D2star)},
              {"DN", to_json(cert.denominators.DN)},
              {"E1", interval_to_json(cert.denominators.E1)},
              {"E2", interval_to_json(cert.denominators.E2)},
              {"E1star", interval_to_json(cert.denominators.E1star)},
              {"E2star", interval_to_json(cert.denominators.E2star)}}},
            {"checks", checks},
            {"overall", tristate_to_json(cert.overall)}};
}

json to_json(const BoundConstants& c) {
    return {{"c1", interval_to_json(c.c1)},   {"c2", interval_to_json(c.c2)},
            {"c3", interval_to_json(c.c3)},   {"c4", interval_to_json(c.c4)},
            {"c5", interval_to_json(c.c5)},   {"c6", interval_to_json(c.c6)},
            {"b1hat", interval_to_json(c.b1hat)}, {"b1", interval_to_json(c.b1)},
            {"b3", interval_to_json(c.b3)},   {"e1hat", interval_to_json(c.e1hat)},
            {"e1", interval_to_json(c.e1)},   {"e3", interval_to_json(c.e3)},
            {"N2", interval_to_json(c.N2)},   {"R", c.R.get_str()},
            {"S", c.S.get_str()},             {"Rhat", c.Rhat.get_str()},
            {"Shat", c.Shat.get_str()},       {"abs_alpha", interval_to_json(c.abs_alpha)},
            {"abs_b", interval_to_json(c.abs_b)}, {"m", c.m}};
}

json to_json(const DConstants& d) {
    return {{"d0", interval_to_json(d.d0)}, {"d1", interval_to_json(d.d1)}, {"d2", interval_to_json(d.d2)}};
}

json to_json(const BoundReport& rep, const LinearForm& form) {
    json beta = json::array();
    for (const auto& z : form.beta) beta.push_back(to_json(z));
    json out = {{"schema", 1},
                {"beta", beta},
                {"alpha_num", to_json(form.alpha_num)},
                {"alpha_den", to_json(form.alpha_den)},
                {"constants", to_json(rep.constants)},
                {"d", to_json(rep.d)},
                {"x2", interval_to_json(rep.x2)},
                {"admissible", tristate_to_json(rep.admissible)},
                {"value_re", interval_to_json(rep.value.re)},
                {"value_im", interval_to_json(rep.value.im)},
                {"value_abs_squared", interval_to_json(rep.value_abs_squared)},
                {"comparison", tristate_to_json(rep.comparison)},
                {"comparison_empirical", rep.comparison_empirical},
                {"identity_lhs", interval_to_json(rep.identity_lhs)},
                {"identity_rhs", interval_to_json(rep.identity_rhs)},
                {"identity_overlap", rep.identity_overlap}};
    if (rep.have_corollary) {
        out["corollary_bound"] = interval_to_json(rep.corollary);
        out["corollary_bound_decimal"] = json::array(
            {decimal_lower(rep.corollary.lo, 12), decimal_upper(rep.corollary.hi, 12)});
    }
    if (rep.have_theorem) {
        out["theorem_bound"] = interval_to_json(rep.theorem);
        out["theorem_bound_decimal"] = json::array(
            {decimal_lower(rep.theorem.lo, 12), decimal_upper(rep.theorem.hi, 12)});
    }
    out["value_re_decimal"] = json::array({decimal_lower(rep.value.re.lo, 12), decimal_upper(rep.value.re.hi, 12)});
    out["value_im_decimal"] = json::array({decimal_lower(rep.value.im.lo, 12), decimal_upper(rep.value.im.hi, 12)});
    return out;
}

json to_json(const StressSummary& s) {
    json out = {{"schema", 1},
                {"trials", s.trials},
                {"violations", s.violations},
                {"skipped_small_h", s.skipped_small_h},
                {"undecided", s.undecided},
                {"zero_enclosures", s.zero_enclosures},
                {"seed", s.seed},
                {"box", s.box}};
    if (s.have_min_ratio) out["min_ratio_lower_bound"] = decimal_lower(s.min_ratio_lo, 12);
    return out;
}

QuadraticInt quadratic_int_from_json(const json& j) {
    return QuadraticInt(j.at("d").get<unsigned long>(), Int(j.at("x").get<std::string>()),
                        Int(j.at("y").get<std::string>()), j.at("half_basis").get<bool>());
}

} // namespace pade
