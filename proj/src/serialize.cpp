#include "whtk/serialize.hpp"

#include "whtk/error.hpp"

namespace whtk {
namespace {

Json poly_array(const std::vector<Polynomial>& ps) {
    Json out = Json::array();
    for (const Polynomial& p : ps) out.push_back(to_json(p));
    return out;
}

Json string_array(const std::vector<Polynomial>& ps) {
    Json out = Json::array();
    for (const Polynomial& p : ps) out.push_back(to_string(p));
    return out;
}

Json ratfun_array(const std::vector<RationalFunction>& fs) {
    Json out = Json::array();
    for (const RationalFunction& f : fs) out.push_back(to_json(f));
    return out;
}

std::vector<RationalFunction> ratfun_vector_from_json(const Json& j) {
    std::vector<RationalFunction> out;
    for (const Json& e : j) out.push_back(ratfun_from_json(e));
    return out;
}

}  // namespace

std::string coeff_to_string(const GaussianRational& c) {
    return to_string(c);
}

GaussianRational coeff_from_string(const std::string& text) {
    RationalFunction f = parse_rational_function(text);
    if (!f.is_polynomial() || f.num().degree() > 0)
        throw ParseError(0, "coefficient string is not a constant: " + text);
    return f.num().coeff(0);
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const GaussianRational& c : p.coeffs()) out.push_back(coeff_to_string(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    std::vector<GaussianRational> coeffs;
    for (const Json& c : j) coeffs.push_back(coeff_from_string(c.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

Json to_json(const RationalFunction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction ratfun_from_json(const Json& j) {
    return RationalFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

Json to_json(const MatPoly& a) {
    Json out = Json::array();
    for (int i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (int jcol = 0; jcol < a.size(); ++jcol) row.push_back(to_json(a.at(i, jcol)));
        out.push_back(std::move(row));
    }
    return out;
}

MatPoly matpoly_from_json(const Json& j) {
    const int m = static_cast<int>(j.size());
    MatPoly a(m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(j.at(i).size()) != m) throw ParseError(0, "matrix grid is not square");
        for (int jcol = 0; jcol < m; ++jcol) a.at(i, jcol) = polynomial_from_json(j.at(i).at(jcol));
    }
    return a;
}

Json to_json(const RatMat& a) {
    Json out = Json::array();
    for (int i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (int jcol = 0; jcol < a.size(); ++jcol) row.push_back(to_json(a.at(i, jcol)));
        out.push_back(std::move(row));
    }
    return out;
}

RatMat ratmat_from_json(const Json& j) {
    const int m = static_cast<int>(j.size());
    RatMat a(m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(j.at(i).size()) != m) throw ParseError(0, "matrix grid is not square");
        for (int jcol = 0; jcol < m; ++jcol) a.at(i, jcol) = ratfun_from_json(j.at(i).at(jcol));
    }
    return a;
}

Json to_json(const RatMatFun& om) {
    RatMat w = om.omega();
    Json entries = Json::array();
    for (int i = 0; i < w.size(); ++i) {
        Json row = Json::array();
        for (int jcol = 0; jcol < w.size(); ++jcol) row.push_back(to_string(w.at(i, jcol)));
        entries.push_back(std::move(row));
    }
    return Json{{"size", om.m}, {"entries", std::move(entries)}};
}

InputDocument document_from_json(const Json& j) {
    InputDocument doc;
    const Json& grid = j.contains("entries") ? j.at("entries") : j;
    if (!grid.is_array()) throw ParseError(0, "expected an entries grid");
    for (const Json& row : grid) {
        if (!row.is_array()) throw ParseError(0, "expected an array of rows");
        std::vector<std::string> r;
        for (const Json& e : row) r.push_back(e.get<std::string>());
        doc.entries.push_back(std::move(r));
    }
    doc.size = j.contains("size") ? j.at("size").get<int>() : static_cast<int>(doc.entries.size());
    return doc;
}

RatMatFun ratmatfun_from_json(const Json& j) {
    return parse_matrix(document_from_json(j));
}

Json to_json(const WHFactorization& fact) {
    return Json{{"k", fact.k},
                {"Omega_minus", to_json(fact.Omega_minus)},
                {"Omega_circ", ratfun_array(fact.Omega_circ)},
                {"P0", to_json(fact.P0)},
                {"Omega_plus", to_json(fact.Omega_plus)}};
}

WHFactorization factorization_from_json(const Json& j) {
    WHFactorization fact;
    fact.k = j.at("k").get<int>();
    fact.Omega_minus = ratmat_from_json(j.at("Omega_minus"));
    fact.Omega_circ = ratfun_vector_from_json(j.at("Omega_circ"));
    fact.P0 = matpoly_from_json(j.at("P0"));
    fact.Omega_plus = ratmat_from_json(j.at("Omega_plus"));
    return fact;
}

Json to_json(const FredholmReport& rep) {
    Json out{{"is_fredholm", rep.is_fredholm}};
    out["index"] = rep.index ? Json(*rep.index) : Json(nullptr);
    out["m"] = rep.m;
    out["k"] = rep.k;
    out["q_degrees"] = rep.q_degrees;
    out["n_exponents"] = rep.n_exponents;
    out["witnesses"] = string_array(rep.witnesses);
    return out;
}

Json to_json(const SmithDecomposition& s) {
    return Json{{"E", to_json(s.E)},
                {"D", poly_array(s.D)},
                {"F", to_json(s.F)},
                {"region", s.region ? Json(to_string(*s.region)) : Json("classical")}};
}

Json to_json(const Diag2x2& d) {
    return Json{{"outer_minus", to_json(d.outer_minus)},
                {"middle", ratfun_array(d.middle)},
                {"outer_plus", to_json(d.outer_plus)}};
}

Json to_json(const PipelineTrace& t) {
    Json step1{{"q", to_json(t.q)},
               {"kappa", t.split_q.kappa},
               {"omega_minus", to_json(t.split_q.omega_minus)},
               {"omega_circ", to_json(t.split_q.omega_circ)},
               {"omega_plus", to_json(t.split_q.omega_plus)}};
    Json step2{{"P1", to_json(t.P1)},
               {"E1", to_json(t.E1)},
               {"D1_minus", poly_array(t.D1_minus)},
               {"D1_circ", poly_array(t.D1_circ)},
               {"D1_plus", poly_array(t.D1_plus)},
               {"F1", to_json(t.F1)}};
    Json step3{{"N", t.N},
               {"P2", to_json(t.P2)},
               {"E2", to_json(t.E2)},
               {"D2_minus", poly_array(t.D2_minus)},
               {"D2_circ", poly_array(t.D2_circ)},
               {"D2_plus", poly_array(t.D2_plus)},
               {"F2", to_json(t.F2)},
               {"rho", t.rho},
               {"D2_circ_tilde", poly_array(t.D2_circ_tilde)},
               {"eta", t.eta}};
    Json p0 = Json::array();
    for (const GaussianRational& c : t.p_at_zero) p0.push_back(coeff_to_string(c));
    step3["p_at_zero"] = std::move(p0);
    Json step4{{"K", t.K},
               {"P3", to_json(t.P3)},
               {"Q3", to_json(t.split3.Q)},
               {"R3", to_json(t.split3.R)},
               {"n_exponents", t.split3.n_exponents}};
    return Json{{"step1", std::move(step1)},
                {"step2", std::move(step2)},
                {"step3", std::move(step3)},
                {"step4", std::move(step4)}};
}

}  // namespace whtk
