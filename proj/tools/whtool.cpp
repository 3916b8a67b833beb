#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "whtk/serialize.hpp"

namespace {

using namespace whtk;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& machine, const std::string& human, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << human;
        return;
    }
    if (json_path == "-") {
        std::cout << machine.dump(2) << "\n";
        return;
    }
    std::ofstream out(json_path);
    if (!out) throw ParseError(0, "cannot open output file: " + json_path);
    out << machine.dump(2) << "\n";
}

std::string show(const RatMat& a, const std::string& indent = "  ") {
    std::string out;
    for (int i = 0; i < a.size(); ++i) {
        out += indent + "[";
        for (int j = 0; j < a.size(); ++j)
            out += (j ? ", " : " ") + to_string(a.at(i, j));
        out += " ]\n";
    }
    return out;
}

std::string show(const MatPoly& a, const std::string& indent = "  ") {
    return show(RatMat(a), indent);
}

std::string show(const WHFactorization& fact) {
    std::string out = "k = " + std::to_string(fact.k) + "\n";
    out += "Omega_minus =\n" + show(fact.Omega_minus);
    out += "Omega_circ = diag(";
    for (std::size_t j = 0; j < fact.Omega_circ.size(); ++j)
        out += (j ? ", " : "") + to_string(fact.Omega_circ[j]);
    out += ")\n";
    out += "P0 =\n" + show(fact.P0);
    out += "Omega_plus =\n" + show(fact.Omega_plus);
    return out;
}

int cmd_smith(const std::string& in, const std::string& region, const std::string& json_path) {
    Json doc = load_json(in);
    InputDocument grid = document_from_json(doc);
    const int m = grid.size;
    if (m == 0 || static_cast<int>(grid.entries.size()) != m)
        throw ParseError(0, "matrix grid is empty or not square");
    MatPoly P(m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(grid.entries[i].size()) != m)
            throw ParseError(0, "matrix grid is not square");
        for (int j = 0; j < m; ++j) P.at(i, j) = parse_polynomial(grid.entries[i][j]);
    }

    SmithDecomposition s;
    if (region.empty()) {
        s = smith_decompose(P);
    } else {
        Region r = region == "inside"    ? Region::InsideDisk
                   : region == "circle"  ? Region::OnCircle
                                         : Region::OutsideDisk;
        s = regional_smith(P, r);
    }

    std::string human = "D = diag(";
    for (std::size_t j = 0; j < s.D.size(); ++j) human += (j ? ", " : "") + to_string(s.D[j]);
    human += ")\nE =\n" + show(s.E) + "F =\n" + show(s.F);
    emit(to_json(s), human, json_path);
    return 0;
}

int cmd_factor(const std::string& in, bool trace, const std::string& json_path) {
    RatMatFun om = ratmatfun_from_json(load_json(in));
    auto [fact, tr] = wh_factorize(om);
    Json machine = to_json(fact);
    std::string human = show(fact);
    if (trace) {
        machine["trace"] = to_json(tr);
        human += "trace:\n" + to_json(tr).dump(2) + "\n";
    }
    emit(machine, human, json_path);
    return 0;
}

int cmd_fredholm(const std::string& in, const std::string& json_path) {
    FredholmReport rep = fredholm_of(ratmatfun_from_json(load_json(in)));
    std::string human;
    if (rep.is_fredholm) {
        human = "Fredholm: yes\nindex = " + std::to_string(*rep.index) + "\n";
    } else {
        human = "Fredholm: no\nwitnesses:";
        for (const Polynomial& w : rep.witnesses) human += " " + to_string(w);
        human += "\n";
    }
    emit(to_json(rep), human, json_path);
    return 0;
}

int cmd_verify(const std::string& in, const std::string& fact_path, const std::string& json_path) {
    RatMatFun om = ratmatfun_from_json(load_json(in));
    WHFactorization fact = factorization_from_json(load_json(fact_path));
    WHVerification v = verify_wh(om, fact);
    Json machine{{"ok", v.ok()},
                 {"product_equal", v.product_equal},
                 {"minus_unit", v.minus_unit},
                 {"plus_unit", v.plus_unit},
                 {"circ_on_circle", v.circ_on_circle},
                 {"p0_form", v.p0_form},
                 {"circ_matches_smith", v.circ_matches_smith},
                 {"polynomial_parts", v.polynomial_parts}};
    std::string human;
    for (auto it = machine.begin(); it != machine.end(); ++it)
        human += it.key() + ": " + (it.value().get<bool>() ? "yes" : "no") + "\n";
    emit(machine, human, json_path);
    return v.ok() ? 0 : 2;
}

int cmd_diag2x2(const std::string& in, const std::string& json_path) {
    Diag2x2 d = diagonalize_2x2(ratmatfun_from_json(load_json(in)));
    std::string human = "outer_minus =\n" + show(d.outer_minus) + "middle = diag(";
    for (std::size_t j = 0; j < d.middle.size(); ++j)
        human += (j ? ", " : "") + to_string(d.middle[j]);
    human += ")\nouter_plus =\n" + show(d.outer_plus);
    emit(to_json(d), human, json_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factorization toolkit for square rational matrix functions"};
    app.require_subcommand(1);

    std::string in, fact_path, region, json_path;
    bool trace = false;

    CLI::App* smith = app.add_subcommand("smith", "Smith decomposition of a polynomial matrix");
    smith->add_option("input", in)->required();
    smith->add_option("--region", region)->check(CLI::IsMember({"inside", "circle", "outside"}));

    CLI::App* factor = app.add_subcommand("factor", "factorize a rational matrix function");
    factor->add_option("input", in)->required();
    factor->add_flag("--trace", trace, "include the full pipeline trace");

    CLI::App* fred = app.add_subcommand("fredholm", "Fredholmness and index of the symbol");
    fred->add_option("input", in)->required();

    CLI::App* verify = app.add_subcommand("verify", "check a factorization against its input");
    verify->add_option("input", in)->required();
    verify->add_option("factorization", fact_path)->required();

    CLI::App* diag = app.add_subcommand("diag2x2", "Bezout diagonalization of a 2x2 triangular input");
    diag->add_option("input", in)->required();

    for (CLI::App* sub : {smith, factor, fred, verify, diag})
        sub->add_option("--json", json_path, "write JSON to this path ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (smith->parsed()) return cmd_smith(in, region, json_path);
        if (factor->parsed()) return cmd_factor(in, trace, json_path);
        if (fred->parsed()) return cmd_fredholm(in, json_path);
        if (verify->parsed()) return cmd_verify(in, fact_path, json_path);
        return cmd_diag2x2(in, json_path);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
